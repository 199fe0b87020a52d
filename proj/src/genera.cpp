#include "tcalc/genera.hpp"

#include <cmath>

namespace tcalc {

namespace {

// Euler-Maclaurin tail parameters. N = 24, K = 12 puts the remainder far
// below 1e-15 for every s >= 2 used here.
constexpr int kEmCutoff = 24;
constexpr int kEmCorrections = 12;

double bernoulli_d(int m) { return bernoulli(m).to_double(); }

}  // namespace

Rational zeta_neg(int m) {
  if (m < 0) throw std::invalid_argument("zeta_neg: negative argument");
  // zeta(-m) = (-1)^m B_{m+1}/(m+1) in the B_1 = -1/2 convention;
  // the sign only matters at m = 0 where it gives zeta(0) = -1/2.
  Rational v = bernoulli(m + 1) / Rational(m + 1);
  return (m % 2 == 0) ? v : -v;
}

double zeta_numeric(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta_numeric: requires s > 1");
  const double n = kEmCutoff;
  double sum = 0.0;
  for (int i = kEmCutoff - 1; i >= 1; --i) sum += std::pow(i, -s);
  double tail = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
  // (s)_{2k-1} * N^{-s-2k+1} corrections
  double rising = s;           // s (s+1) ... (s+2k-2)
  double npow = std::pow(n, -s - 1.0);
  for (int k = 1; k <= kEmCorrections; ++k) {
    tail += bernoulli_d(2 * k) / factorial_scalar<double>(2 * k) * rising * npow;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    npow /= n * n;
  }
  return sum + tail;
}

double zeta_prime_numeric(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta_prime_numeric: requires s > 1");
  const double n = kEmCutoff;
  const double ln = std::log(n);
  double sum = 0.0;
  for (int i = kEmCutoff - 1; i >= 2; --i) sum -= std::log(i) * std::pow(i, -s);
  double tail = -ln * std::pow(n, 1.0 - s) / (s - 1.0) - std::pow(n, 1.0 - s) / ((s - 1.0) * (s - 1.0));
  tail += -0.5 * ln * std::pow(n, -s);
  double rising = s;
  double risingLogDeriv = 1.0 / s;  // d/ds log (s)_{2k-1}
  double npow = std::pow(n, -s - 1.0);
  for (int k = 1; k <= kEmCorrections; ++k) {
    const double c = bernoulli_d(2 * k) / factorial_scalar<double>(2 * k);
    tail += c * npow * rising * (risingLogDeriv - ln);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    risingLogDeriv += 1.0 / (s + 2 * k - 1) + 1.0 / (s + 2 * k);
    npow /= n * n;
  }
  return sum + tail;
}

double euler_gamma() {
  static const double g = [] {
    const int n = 30;
    double h = 0.0;
    for (int i = n; i >= 1; --i) h += 1.0 / i;
    double v = h - std::log(static_cast<double>(n)) - 0.5 / n;
    double npow = 1.0 / (static_cast<double>(n) * n);
    for (int k = 1; k <= 10; ++k) {
      v += bernoulli_d(2 * k) / (2 * k) * npow;
      npow /= static_cast<double>(n) * n;
    }
    return v;
  }();
  return g;
}

namespace {

double harmonic(int m) {
  double h = 0.0;
  for (int i = 1; i <= m; ++i) h += 1.0 / i;
  return h;
}

// sin(pi m / 2) for integer m, exactly.
int sin_half_pi(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return 0;
    case 1: return 1;
    case 2: return 0;
    default: return -1;
  }
}

}  // namespace

double zeta_neg_via_functional_equation(int m) {
  if (m < 1) throw std::invalid_argument("zeta_neg_via_functional_equation: m >= 1");
  // zeta(-m) = 2^{-m} pi^{-m-1} sin(-pi m/2) Gamma(1+m) zeta(1+m)
  return std::pow(2.0, -m) * std::pow(M_PI, -m - 1) * (-sin_half_pi(m)) *
         factorial_scalar<double>(m) * zeta_numeric(m + 1.0);
}

double zeta_prime_neg(int m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("zeta_prime_neg: requires odd m >= 1");
  // Differentiating zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  // at s = -m (odd m, so cos(pi s/2) = 0 there kills the cotangent term):
  //   zeta'(-m) = zeta(-m) (log 2pi - psi(m+1))
  //             + sin(pi m/2) 2^{-m} pi^{-m-1} m! zeta'(m+1).
  const double psi = -euler_gamma() + harmonic(m);
  return zeta_neg(m).to_double() * (std::log(2.0 * M_PI) - psi) +
         sin_half_pi(m) * std::pow(2.0, -m) * std::pow(M_PI, -m - 1) *
             factorial_scalar<double>(m) * zeta_prime_numeric(m + 1.0);
}

double r_coefficient(int m) {
  if (m < 1) throw std::invalid_argument("r_coefficient: requires m >= 1");
  if (m % 2 == 0) return 0.0;
  return 2.0 * zeta_prime_neg(m) + harmonic(m) * zeta_neg(m).to_double();
}

Genus<double> r_genus(int order) {
  Series<double> s(order);
  for (int n = 1; n <= order; n += 2) s[n] = r_coefficient(n) / factorial_scalar<double>(n);
  return Genus<double>(std::move(s));
}

Genus<double> bk_genus(int order) {
  Series<double> s(order);
  for (int n = 1; n <= order; n += 2)
    s[n] = -0.5 * r_coefficient(n) / factorial_scalar<double>(n);
  return Genus<double>(std::move(s));
}

}  // namespace tcalc
