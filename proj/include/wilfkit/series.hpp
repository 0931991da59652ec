#ifndef WILFKIT_SERIES_HPP
#define WILFKIT_SERIES_HPP

/*
 * Exact truncated power series over arbitrary-precision rationals.
 *
 * Everything here is exact: coefficients are reduced fractions of big
 * integers, so there are no tolerance questions anywhere — a residual either
 * is the zero series or it is not.  Univariate series are truncated at a
 * fixed order N (coefficients of x^0..x^N); bivariate series are truncated
 * by total degree, which is the right notion when both substitution targets
 * have valuation 1.  Mixed-order operations truncate to the smaller order
 * rather than padding with invented zeros.
 *
 * The concrete series of interest:
 *   - f(x) = (1 - x - sqrt(1 - 6x + x^2)) / 2, the large Schroder numbers
 *     (1, 2, 6, 22, 90, 394, ...) with constant term 0;
 *   - M(x) with M = 1 + xM + x^2 M^2, the Motzkin numbers (1, 1, 2, 4, 9,
 *     21, ...);
 *   - s(u, v) = 2u^2v^2(1+v) / (1 - 2uv(u+2) - uv^2(u+2)
 *               + (1-uv) sqrt(1 - 2uv(2u+3) - uv^2(3u+4))),
 *     which counts simple skew-merged permutations containing 2413 and
 *     avoiding 3142 by length statistics (u and v track the two merged
 *     subsequences; only row sums a+b = n are consumed here);
 *   - the defining identity  f = x + (2xf - x^2(f+1)) + f^2/(1+f)
 *               + s(x/(1-x), f),
 *     whose three middle terms count the sum-decomposable, the
 *     skew-decomposable and the proper inflations of long simples in the
 *     class counted by f.  solve_by_bootstrap recovers f from the identity
 *     coefficient by coefficient, which is exactly why the identity pins the
 *     counting sequence down uniquely.
 */

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wilfkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class TruncatedSeries {
public:
    // The zero series truncated at `order` (coefficients 0..order).
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    static TruncatedSeries constant(const Rational& c, std::size_t order);
    static TruncatedSeries x(std::size_t order);  // the monomial x
    static TruncatedSeries from_coeffs(std::vector<Rational> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }
    void set_coeff(std::size_t k, Rational v) { coeffs_.at(k) = std::move(v); }

    // Copy truncated (or zero-extended) to a new order.  Extension is only
    // meaningful when higher coefficients are genuinely zero; callers that
    // extend say so explicitly by using this.
    TruncatedSeries with_order(std::size_t new_order) const;

    bool is_zero() const;
    bool operator==(const TruncatedSeries&) const = default;

    std::string str() const;  // "c0 + c1*x + c2*x^2 + ..."

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);

// Quotient; b must have a nonzero constant term (throws otherwise).
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// a(b(x)); b must have zero constant term (throws otherwise).
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

// Square root with constant term 1; a must have constant term 1 (throws
// otherwise).  Newton iteration y <- (y + a/y)/2; the result is verified by
// squaring before it is returned.
TruncatedSeries sqrt_unit(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

// Coefficients as exact integers; throws std::domain_error if any
// denominator is not 1.
std::vector<BigInt> integer_coeffs(const TruncatedSeries& s);

class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t order);  // zero, total degree <= order

    static BivariateSeries constant(const Rational& c, std::size_t order);
    static BivariateSeries u(std::size_t order);
    static BivariateSeries v(std::size_t order);

    std::size_t order() const { return order_; }
    const Rational& coeff(std::size_t a, std::size_t b) const;  // [u^a v^b]
    void set_coeff(std::size_t a, std::size_t b, Rational val);

    // Sum of coefficients with a + b = n (the length-n row total).
    Rational antidiagonal_sum(std::size_t n) const;

    bool is_zero() const;
    bool operator==(const BivariateSeries&) const = default;

private:
    std::size_t order_;
    std::vector<std::vector<Rational>> c_;  // c_[a][b], a + b <= order
};

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries scale(const BivariateSeries& a, const Rational& c);
BivariateSeries div(const BivariateSeries& a, const BivariateSeries& b);  // b(0,0) != 0
BivariateSeries sqrt_unit(const BivariateSeries& a);                      // a(0,0) == 1

inline BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) { return add(a, b); }
inline BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) { return sub(a, b); }
inline BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) { return mul(a, b); }

// f = (1 - x - sqrt(1 - 6x + x^2)) / 2 to order n: the large Schroder
// numbers at x^1.. with constant term 0.
TruncatedSeries schroeder_gf(std::size_t order);

// M = 1 + xM + x^2 M^2 to the requested order, by fixpoint iteration.
TruncatedSeries motzkin_gf(std::size_t order);

// The two-variable simple-permutation series s(u, v) truncated by total
// degree; lowest term is u^2 v^2.
BivariateSeries s_bivariate(std::size_t order);

// s with univariate series substituted for u and v (both must have zero
// constant term); computed directly in the univariate ring.
TruncatedSeries s_eval(const TruncatedSeries& u_sub, const TruncatedSeries& v_sub,
                       std::size_t order);

// Sum-decomposable part 2xf - x^2(f+1) and skew-decomposable part f^2/(1+f)
// of the class counted by f.
TruncatedSeries sum_decomposable_gf(const TruncatedSeries& f);
TruncatedSeries skew_decomposable_gf(const TruncatedSeries& f);

// Residual  (x + sum_dec + skew_dec + s(x/(1-x), f)) - f  with
// f = schroeder_gf(order); the zero series iff the identity holds.
TruncatedSeries verify_functional_equation(std::size_t order);

// Recover the unique power-series solution with constant term 0 of the same
// identity, coefficient by coefficient.  Must reproduce schroeder_gf.
TruncatedSeries solve_by_bootstrap(std::size_t order);

}  // namespace wilfkit

#endif
