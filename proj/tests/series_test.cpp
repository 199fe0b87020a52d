#include "tcalc/series.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace tcalc;

namespace {

Series<Rational> from_fractions(int order, std::vector<std::pair<long, long>> fr) {
  Series<Rational> s(order);
  for (int i = 0; i <= order; ++i) s[i] = Rational(fr[static_cast<size_t>(i)].first,
                                                   fr[static_cast<size_t>(i)].second);
  return s;
}

// Independent Bernoulli oracle: extract B_m from the series x/(e^x - 1) by
// inverting (e^x - 1)/x, bypassing the recurrence used in bernoulli().
Rational bernoulli_series_oracle(int m) {
  const int order = m;
  Series<Rational> q(order);
  for (int i = 0; i <= order; ++i) q[i] = Rational(1) / factorial_scalar<Rational>(i + 1);
  Series<Rational> inv = div(Series<Rational>::one(order), q);
  return inv[m] * factorial_scalar<Rational>(m);
}

}  // namespace

TEST_CASE("multiplication: difference of squares") {
  Series<Rational> f(2, {Rational(1), Rational(1), Rational(0)});
  Series<Rational> g(2, {Rational(1), Rational(-1), Rational(0)});
  CHECK(mul(f, g) == Series<Rational>(2, {Rational(1), Rational(0), Rational(-1)}));
}

TEST_CASE("division: x over 1 - e^{-x}") {
  // Inputs at order 5; x/(1-e^{-x}) cancels one valuation, leaving order 4.
  Series<Rational> x = Series<Rational>::identity(5);
  Series<Rational> den = Series<Rational>::one(5) - exp_neg_series<Rational>(5);
  Series<Rational> q = div(x, den);
  REQUIRE(q.order() == 4);
  Series<Rational> expected =
      from_fractions(4, {{1, 1}, {1, 2}, {1, 12}, {0, 1}, {-1, 720}});
  CHECK(q == expected);
  // verification identity: quotient * divisor reproduces the dividend
  Series<Rational> den4(4, {den[0], den[1], den[2], den[3], den[4]});
  Series<Rational> x4 = Series<Rational>::identity(4);
  CHECK(mul(q, den4) == x4);
  // Bernoulli cross-check: coefficient n is (-1)^n B_n / n!
  for (int n = 0; n <= 4; ++n) {
    Rational b = bernoulli(n) / factorial_scalar<Rational>(n);
    CHECK(q[n] == (n % 2 == 0 ? b : -b));
  }
}

TEST_CASE("composition: x^2 after x + x^2") {
  Series<Rational> f = Series<Rational>::monomial(3, 2, Rational(1));
  Series<Rational> g(3, {Rational(0), Rational(1), Rational(1), Rational(0)});
  CHECK(compose(f, g) ==
        Series<Rational>(3, {Rational(0), Rational(0), Rational(1), Rational(2)}));
}

TEST_CASE("combine dispatch matches the named operations") {
  Series<Rational> f(3, {Rational(1), Rational(2), Rational(0), Rational(1)});
  Series<Rational> g(3, {Rational(1), Rational(0), Rational(1), Rational(0)});
  CHECK(combine(CombineKind::Add, f, g) == f + g);
  CHECK(combine(CombineKind::Mul, f, g) == mul(f, g));
  CHECK(combine(CombineKind::Div, f, g) == div(f, g));
  Series<Rational> h(3, {Rational(0), Rational(1), Rational(1), Rational(0)});
  CHECK(combine(CombineKind::Compose, f, h) == compose(f, h));
}

TEST_CASE("standard series") {
  CHECK(todd_series<Rational>(2) == from_fractions(2, {{1, 1}, {1, 2}, {1, 12}}));
  CHECK(exp_series<Rational>(3) == from_fractions(3, {{1, 1}, {1, 1}, {1, 2}, {1, 6}}));
  for (int order : {0, 3, 7})
    CHECK(ch_line_series<Rational>(order, Rational(0)) == Series<Rational>::one(order));
  CHECK(ch_line_series<Rational>(2, Rational(3)) ==
        Series<Rational>(2, {Rational(1), Rational(3), Rational(9, 2)}));
  CHECK(standard_series<Rational>(StandardSeries::Todd, 2) == todd_series<Rational>(2));
  // todd coefficients are B^+_n / n! (sign-flipped odd Bernoulli numbers)
  Series<Rational> td = todd_series<Rational>(16);
  for (int n = 0; n <= 16; ++n) {
    Rational b = bernoulli(n) / factorial_scalar<Rational>(n);
    CHECK(td[n] == (n % 2 == 0 ? b : -b));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int m : {0, 1, 2, 4, 8, 12, 14}) CHECK(bernoulli(m) == bernoulli_series_oracle(m));
  for (int k = 1; k <= 15; ++k) CHECK(bernoulli(2 * k + 1).is_zero());
}

TEST_CASE("mul/div round trip on random series") {
  testutil::Rng rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 12);
    Series<Rational> f = testutil::random_series(rng, order);
    if (f[0].is_zero()) f[0] = Rational(1, 3);
    Series<Rational> g = testutil::random_series(rng, order);
    CHECK(mul(f, div(g, f)) == g);
  }
}

TEST_CASE("todd times inverse todd is one at every order up to 16") {
  for (int order = 0; order <= 16; ++order) {
    CHECK(mul(todd_series<Rational>(order), todd_inv_series<Rational>(order)) ==
          Series<Rational>::one(order));
  }
}

TEST_CASE("error paths") {
  Series<Rational> a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(div(Series<Rational>::one(3), Series<Rational>(3)), std::invalid_argument);
  // valuation of divisor above dividend
  Series<Rational> x2 = Series<Rational>::monomial(3, 2, Rational(1));
  Series<Rational> one3 = Series<Rational>::one(3);
  CHECK_THROWS_AS(div(one3, x2), std::invalid_argument);
  Series<Rational> nonzero_const(3, {Rational(1), Rational(1), Rational(0), Rational(0)});
  CHECK_THROWS_AS(compose(one3, nonzero_const), std::invalid_argument);
  CHECK_THROWS_AS(Series<Rational>(2, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(Series<Rational>(-1), std::invalid_argument);
}

TEST_CASE("floating instantiation stays in floating arithmetic") {
  Series<double> e = exp_series<double>(6);
  Series<double> en = exp_neg_series<double>(6);
  Series<double> p = mul(e, en);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (int i = 1; i <= 6; ++i) CHECK(std::abs(p[i]) < 1e-15);
  // extended precision instantiation
  Series<long double> q = mul(todd_series<long double>(8), todd_inv_series<long double>(8));
  CHECK(static_cast<double>(q[0]) == doctest::Approx(1.0).epsilon(1e-18));
  for (int i = 1; i <= 8; ++i) CHECK(std::abs(static_cast<double>(q[i])) < 1e-18);
}
