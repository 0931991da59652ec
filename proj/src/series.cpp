#include "wilfkit/series.hpp"

#include <stdexcept>
#include <utility>

namespace wilfkit {

namespace {

std::string rat_str(const Rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

std::size_t min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s.set_coeff(0, c);
    return s;
}

TruncatedSeries TruncatedSeries::x(std::size_t order) {
    if (order < 1) throw std::invalid_argument("monomial x needs order >= 1");
    TruncatedSeries s(order);
    s.set_coeff(1, 1);
    return s;
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant term");
    TruncatedSeries s(coeffs.size() - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t new_order) const {
    TruncatedSeries out(new_order);
    for (std::size_t k = 0; k <= std::min(new_order, order()); ++k) out.coeffs_[k] = coeffs_[k];
    return out;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::string out = rat_str(coeffs_[0]);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out += " + " + rat_str(coeffs_[k]) + "*x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(min_order(a, b));
    for (std::size_t k = 0; k <= out.order(); ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(min_order(a, b));
    for (std::size_t k = 0; k <= out.order(); ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(min_order(a, b));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
            if (b.coeff(j) == 0) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k) * c);
    return out;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff(0) == 0) throw std::invalid_argument("series division by zero constant term");
    TruncatedSeries q(min_order(a, b));
    for (std::size_t k = 0; k <= q.order(); ++k) {
        Rational acc = a.coeff(k);
        for (std::size_t j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j);
        q.set_coeff(k, acc / b.coeff(0));
    }
    return q;
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff(0) != 0) throw std::invalid_argument("composition needs zero constant term");
    const std::size_t n = min_order(a, b);
    // Horner over the series ring: (((a_n) b + a_{n-1}) b + ...) b + a_0
    TruncatedSeries acc = TruncatedSeries::constant(a.coeff(n), n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, b.with_order(n));
        acc.set_coeff(0, acc.coeff(0) + a.coeff(k));
    }
    return acc;
}

TruncatedSeries sqrt_unit(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw std::invalid_argument("sqrt needs constant term 1");
    TruncatedSeries y = TruncatedSeries::constant(1, a.order());
    // quadratic convergence: correct orders double each round
    for (std::size_t correct = 1; correct <= a.order(); correct *= 2)
        y = scale(add(y, div(a, y)), Rational(1, 2));
    if (!sub(mul(y, y), a).is_zero()) throw std::logic_error("sqrt iteration failed to converge");
    return y;
}

std::vector<BigInt> integer_coeffs(const TruncatedSeries& s) {
    std::vector<BigInt> out;
    out.reserve(s.order() + 1);
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (denominator(s.coeff(k)) != 1)
            throw std::domain_error("coefficient of x^" + std::to_string(k) + " is not an integer");
        out.push_back(numerator(s.coeff(k)));
    }
    return out;
}

BivariateSeries::BivariateSeries(std::size_t order) : order_(order) {
    c_.resize(order + 1);
    for (std::size_t a = 0; a <= order; ++a) c_[a].resize(order + 1 - a);
}

BivariateSeries BivariateSeries::constant(const Rational& c, std::size_t order) {
    BivariateSeries s(order);
    s.c_[0][0] = c;
    return s;
}

BivariateSeries BivariateSeries::u(std::size_t order) {
    if (order < 1) throw std::invalid_argument("monomial u needs order >= 1");
    BivariateSeries s(order);
    s.c_[1][0] = 1;
    return s;
}

BivariateSeries BivariateSeries::v(std::size_t order) {
    if (order < 1) throw std::invalid_argument("monomial v needs order >= 1");
    BivariateSeries s(order);
    s.c_[0][1] = 1;
    return s;
}

const Rational& BivariateSeries::coeff(std::size_t a, std::size_t b) const {
    return c_.at(a).at(b);
}

void BivariateSeries::set_coeff(std::size_t a, std::size_t b, Rational val) {
    c_.at(a).at(b) = std::move(val);
}

Rational BivariateSeries::antidiagonal_sum(std::size_t n) const {
    if (n > order_) throw std::out_of_range("antidiagonal beyond truncation order");
    Rational acc = 0;
    for (std::size_t a = 0; a <= n; ++a) acc += c_[a][n - a];
    return acc;
}

bool BivariateSeries::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

namespace {

std::size_t min_order(const BivariateSeries& a, const BivariateSeries& b) {
    return std::min(a.order(), b.order());
}

template <class Op>
BivariateSeries pointwise(const BivariateSeries& a, const BivariateSeries& b, Op op) {
    BivariateSeries out(min_order(a, b));
    for (std::size_t i = 0; i <= out.order(); ++i)
        for (std::size_t j = 0; i + j <= out.order(); ++j)
            out.set_coeff(i, j, op(a.coeff(i, j), b.coeff(i, j)));
    return out;
}

}  // namespace

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
    return pointwise(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
    return pointwise(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(min_order(a, b));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (a.coeff(i, j) == 0) continue;
            for (std::size_t k = 0; i + j + k <= n; ++k)
                for (std::size_t l = 0; i + j + k + l <= n; ++l) {
                    if (b.coeff(k, l) == 0) continue;
                    out.set_coeff(i + k, j + l, out.coeff(i + k, j + l) + a.coeff(i, j) * b.coeff(k, l));
                }
        }
    return out;
}

BivariateSeries scale(const BivariateSeries& a, const Rational& c) {
    BivariateSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
        for (std::size_t j = 0; i + j <= a.order(); ++j) out.set_coeff(i, j, a.coeff(i, j) * c);
    return out;
}

BivariateSeries div(const BivariateSeries& a, const BivariateSeries& b) {
    if (b.coeff(0, 0) == 0) throw std::invalid_argument("series division by zero constant term");
    BivariateSeries q(min_order(a, b));
    const std::size_t n = q.order();
    // by increasing total degree: q_{i,j} from already-solved lower terms
    for (std::size_t d = 0; d <= n; ++d)
        for (std::size_t i = 0; i <= d; ++i) {
            const std::size_t j = d - i;
            Rational acc = a.coeff(i, j);
            for (std::size_t k = 0; k <= i; ++k)
                for (std::size_t l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;  // that is the b(0,0) q_{i,j} term
                    acc -= b.coeff(k, l) * q.coeff(i - k, j - l);
                }
            q.set_coeff(i, j, acc / b.coeff(0, 0));
        }
    return q;
}

BivariateSeries sqrt_unit(const BivariateSeries& a) {
    if (a.coeff(0, 0) != 1) throw std::invalid_argument("sqrt needs constant term 1");
    BivariateSeries y = BivariateSeries::constant(1, a.order());
    for (std::size_t correct = 1; correct <= a.order(); correct *= 2)
        y = scale(add(y, div(a, y)), Rational(1, 2));
    if (!sub(mul(y, y), a).is_zero()) throw std::logic_error("sqrt iteration failed to converge");
    return y;
}

TruncatedSeries schroeder_gf(std::size_t order) {
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    const TruncatedSeries x = TruncatedSeries::x(order);
    // 1 - 6x + x^2
    TruncatedSeries radicand = sub(one, scale(x, 6));
    radicand.set_coeff(2, radicand.coeff(2) + 1);
    return scale(sub(sub(one, x), sqrt_unit(radicand)), Rational(1, 2));
}

TruncatedSeries motzkin_gf(std::size_t order) {
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    const TruncatedSeries x = TruncatedSeries::x(order);
    const TruncatedSeries x2 = mul(x, x);
    TruncatedSeries m = one;
    for (std::size_t round = 0; round <= order; ++round) {
        TruncatedSeries next = add(one, add(mul(x, m), mul(x2, mul(m, m))));
        if (next == m) break;  // each round fixes at least one more order
        m = next;
    }
    return m;
}

BivariateSeries s_bivariate(std::size_t order) {
    const BivariateSeries one = BivariateSeries::constant(1, order);
    const BivariateSeries u = BivariateSeries::u(order);
    const BivariateSeries v = BivariateSeries::v(order);
    const BivariateSeries uv = mul(u, v);
    const BivariateSeries u_plus_2 = add(u, BivariateSeries::constant(2, order));

    const BivariateSeries numerator = scale(mul(mul(u, u), mul(mul(v, v), add(one, v))), 2);
    // radicand 1 - 2uv(2u+3) - uv^2(3u+4)
    BivariateSeries radicand =
        sub(sub(one, scale(mul(uv, add(scale(u, 2), BivariateSeries::constant(3, order))), 2)),
            mul(mul(uv, v), add(scale(u, 3), BivariateSeries::constant(4, order))));
    // denominator 1 - 2uv(u+2) - uv^2(u+2) + (1-uv) sqrt(radicand)
    BivariateSeries denom = sub(sub(one, scale(mul(uv, u_plus_2), 2)), mul(mul(uv, v), u_plus_2));
    denom = add(denom, mul(sub(one, uv), sqrt_unit(radicand)));
    return div(numerator, denom);
}

TruncatedSeries s_eval(const TruncatedSeries& u_sub, const TruncatedSeries& v_sub,
                       std::size_t order) {
    if (u_sub.coeff(0) != 0 || v_sub.coeff(0) != 0)
        throw std::invalid_argument("s_eval substitutions need zero constant term");
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    const TruncatedSeries u = u_sub.with_order(order);
    const TruncatedSeries v = v_sub.with_order(order);
    const TruncatedSeries uv = mul(u, v);
    const TruncatedSeries u_plus_2 = add(u, TruncatedSeries::constant(2, order));

    const TruncatedSeries numerator = scale(mul(mul(u, u), mul(mul(v, v), add(one, v))), 2);
    TruncatedSeries radicand =
        sub(sub(one, scale(mul(uv, add(scale(u, 2), TruncatedSeries::constant(3, order))), 2)),
            mul(mul(uv, v), add(scale(u, 3), TruncatedSeries::constant(4, order))));
    TruncatedSeries denom = sub(sub(one, scale(mul(uv, u_plus_2), 2)), mul(mul(uv, v), u_plus_2));
    denom = add(denom, mul(sub(one, uv), sqrt_unit(radicand)));
    return div(numerator, denom);
}

TruncatedSeries sum_decomposable_gf(const TruncatedSeries& f) {
    const std::size_t n = f.order();
    const TruncatedSeries x = TruncatedSeries::x(n);
    const TruncatedSeries f_plus_1 = add(f, TruncatedSeries::constant(1, n));
    return sub(scale(mul(x, f), 2), mul(mul(x, x), f_plus_1));
}

TruncatedSeries skew_decomposable_gf(const TruncatedSeries& f) {
    const std::size_t n = f.order();
    return div(mul(f, f), add(f, TruncatedSeries::constant(1, n)));
}

namespace {

// x/(1-x) = x + x^2 + x^3 + ...
TruncatedSeries x_over_1_minus_x(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 1; k <= order; ++k) s.set_coeff(k, 1);
    return s;
}

TruncatedSeries identity_rhs(const TruncatedSeries& f, std::size_t order) {
    TruncatedSeries rhs = TruncatedSeries::x(order);
    rhs = add(rhs, sum_decomposable_gf(f));
    rhs = add(rhs, skew_decomposable_gf(f));
    rhs = add(rhs, s_eval(x_over_1_minus_x(order), f, order));
    return rhs;
}

}  // namespace

TruncatedSeries verify_functional_equation(std::size_t order) {
    const TruncatedSeries f = schroeder_gf(order);
    return sub(identity_rhs(f, order), f);
}

TruncatedSeries solve_by_bootstrap(std::size_t order) {
    // The right-hand side's x^k coefficient only involves f's coefficients
    // below k (f has constant term 0, the decomposable parts carry an extra
    // factor of x or f, and s is quadratic and higher in its second slot),
    // so each coefficient is determined by the previous ones.
    TruncatedSeries f(order);
    for (std::size_t k = 1; k <= order; ++k) {
        const TruncatedSeries rhs = identity_rhs(f.with_order(k), k);
        f.set_coeff(k, rhs.coeff(k));
    }
    return f;
}

}  // namespace wilfkit
