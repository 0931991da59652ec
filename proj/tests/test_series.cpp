#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "wilfkit/decomposition.hpp"
#include "wilfkit/enumeration.hpp"
#include "wilfkit/series.hpp"

using namespace wilfkit;

namespace {

std::mt19937 rng(20240517);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

TruncatedSeries random_series(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s.set_coeff(k, random_rational());
    return s;
}

BivariateSeries random_bivariate(std::size_t order) {
    BivariateSeries s(order);
    for (std::size_t a = 0; a <= order; ++a)
        for (std::size_t b = 0; a + b <= order; ++b) s.set_coeff(a, b, random_rational());
    return s;
}

}  // namespace

TEST_CASE("univariate ring laws on random series") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(12), b = random_series(12), c = random_series(12);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK(scale(a, Rational(3, 2)) + scale(a, Rational(-3, 2)) == TruncatedSeries(12));

        // Division inverts multiplication whenever the divisor is a unit.
        auto unit = b;
        unit.set_coeff(0, Rational(1));
        CHECK(div(a * unit, unit) == a);
    }
    CHECK_THROWS(div(random_series(5), TruncatedSeries::x(5)));  // zero constant term
}

TEST_CASE("composition") {
    // a(x) = 1 + x + x^2 composed with b(x) = 2x: 1 + 2x + 4x^2.
    auto a = TruncatedSeries::from_coeffs({Rational(1), Rational(1), Rational(1)});
    auto b = TruncatedSeries::from_coeffs({Rational(0), Rational(2), Rational(0)});
    CHECK(compose(a, b) ==
          TruncatedSeries::from_coeffs({Rational(1), Rational(2), Rational(4)}));

    // Substituting x is the identity.
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_series(10);
        CHECK(compose(s, TruncatedSeries::x(10)) == s);
    }

    // Composition with nonzero constant term is rejected.
    CHECK_THROWS(compose(a, TruncatedSeries::constant(Rational(1), 2)));
}

TEST_CASE("square root against the binomial series") {
    // sqrt(1 + x) has coefficients binomial(1/2, k).
    const std::size_t N = 16;
    auto one_plus_x = TruncatedSeries::constant(Rational(1), N) + TruncatedSeries::x(N);
    const auto root = sqrt_unit(one_plus_x);
    Rational ck(1);
    for (std::size_t k = 0; k <= N; ++k) {
        CHECK(root.coeff(k) == ck);
        ck *= Rational(1, 2) - Rational(std::int64_t(k));
        ck /= std::int64_t(k) + 1;
    }

    // Root of a random perfect square is recovered exactly.
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_series(12);
        u.set_coeff(0, Rational(1));
        CHECK(sqrt_unit(u * u) == u);
    }
    CHECK_THROWS(sqrt_unit(TruncatedSeries::x(5)));  // constant term must be 1
}

TEST_CASE("printing and integer extraction") {
    auto s = TruncatedSeries::from_coeffs({Rational(1), Rational(2), Rational(0), Rational(-3, 2)});
    CHECK(s.str() == "1 + 2*x + 0*x^2 + -3/2*x^3");
    CHECK_THROWS(integer_coeffs(s));

    const auto ints = integer_coeffs(schroeder_gf(5));
    CHECK(ints == std::vector<BigInt>{0, 1, 2, 6, 22, 90});
}

TEST_CASE("schroeder series") {
    const auto f = schroeder_gf(10);
    const std::vector<std::uint64_t> expected{1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
    CHECK(f.coeff(0) == 0);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(f.coeff(n) == expected[n - 1]);

    // f solves its own quadratic: from f = (1 - x - sqrt(1-6x+x^2))/2 we get
    // (1 - x - 2f)^2 = 1 - 6x + x^2, i.e. f^2 - (1-x) f + x = 0... expanded:
    const auto x = TruncatedSeries::x(10);
    const auto one = TruncatedSeries::constant(Rational(1), 10);
    CHECK((f * f - (one - x) * f + x).is_zero());
}

TEST_CASE("motzkin series") {
    const auto m = motzkin_gf(12);
    const std::vector<std::uint64_t> head{1, 1, 2, 4, 9, 21, 51};
    for (std::size_t n = 0; n < head.size(); ++n) CHECK(m.coeff(n) == head[n]);

    // Three-term recurrence (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}.
    for (std::size_t n = 2; n <= 12; ++n)
        CHECK(Rational(std::int64_t(n) + 2) * m.coeff(n) ==
              Rational(2 * std::int64_t(n) + 1) * m.coeff(n - 1) +
                  Rational(3 * (std::int64_t(n) - 1)) * m.coeff(n - 2));

    // Defining equation M = 1 + xM + x^2 M^2.
    const auto x = TruncatedSeries::x(12);
    const auto one = TruncatedSeries::constant(Rational(1), 12);
    CHECK((one + x * m + x * x * m * m - m).is_zero());
}

TEST_CASE("bivariate ring laws") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_bivariate(8), b = random_bivariate(8), c = random_bivariate(8);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);

        auto unit = b;
        unit.set_coeff(0, 0, Rational(1));
        CHECK(div(a * unit, unit) == a);

        auto sq = random_bivariate(8);
        sq.set_coeff(0, 0, Rational(1));
        CHECK(sqrt_unit(sq * sq) == sq);
    }
    CHECK(BivariateSeries::u(4) * BivariateSeries::v(4) ==
          [] {
              BivariateSeries uv(4);
              uv.set_coeff(1, 1, Rational(1));
              return uv;
          }());
}

TEST_CASE("bivariate s series") {
    const auto s = s_bivariate(8);

    // Lowest total degree term is u^2 v^2 with coefficient 1.
    for (std::size_t d = 0; d <= 3; ++d)
        for (std::size_t a = 0; a <= d; ++a) CHECK(s.coeff(a, d - a) == 0);
    CHECK(s.coeff(2, 2) == 1);
    CHECK(s.coeff(3, 1) == 0);
    CHECK(s.coeff(1, 3) == 0);

    // Row sums count simple skew-merged 3142-avoiders by length.
    const PatternSet merged = parse_pattern_set("2143,3142,3412");
    for (std::size_t n = 4; n <= 8; ++n)
        CHECK(s.antidiagonal_sum(n) == simples_in_class(n, merged).size());
}

TEST_CASE("s_eval matches substitution into the bivariate expansion") {
    // Substituting u = v = x turns total degree into plain degree, so the
    // coefficients of s_eval(x, x) are the antidiagonal sums.
    const std::size_t N = 10;
    const auto x = TruncatedSeries::x(N);
    const auto sx = s_eval(x, x, N);
    const auto s2 = s_bivariate(N);
    for (std::size_t n = 0; n <= N; ++n) CHECK(sx.coeff(n) == s2.antidiagonal_sum(n));

    CHECK(s_eval(TruncatedSeries(N), TruncatedSeries(N), N).is_zero());
    CHECK_THROWS(s_eval(TruncatedSeries::constant(Rational(1), N), x, N));
}

TEST_CASE("decomposable parts against direct enumeration") {
    const auto f = schroeder_gf(7);
    const auto fsum = sum_decomposable_gf(f);
    const auto fskew = skew_decomposable_gf(f);
    const PatternSet basis = parse_pattern_set("2143,3142,246135");
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(fsum.coeff(n) == count_avoiders(n, basis, CountFilter::sum_decomposable));
        CHECK(fskew.coeff(n) == count_avoiders(n, basis, CountFilter::skew_decomposable));
    }
}

TEST_CASE("functional equation residual and bootstrap") {
    CHECK(verify_functional_equation(16).is_zero());
    CHECK(solve_by_bootstrap(16) == schroeder_gf(16));
}
