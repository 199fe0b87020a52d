#pragma once

#include <cmath>
#include <stdexcept>

#include "tcalc/series.hpp"

namespace tcalc {

// Truncation order for a floating genus was too small for the requested
// computation. The CLI maps this to its precision exit code.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An additive genus, carried by the power series S(x) = sum a_n x^n.
// Additive genera form a vector space: addition and scaling are provided;
// a product of additive genera is not additive, so there is none.
template <typename T>
class Genus {
public:
  explicit Genus(Series<T> s) : series_(std::move(s)) {}
  explicit Genus(int order) : series_(order) {}

  static Genus zero(int order) { return Genus(Series<T>(order)); }

  // S(x) = x^degree.
  static Genus power(int order, int degree) {
    return Genus(Series<T>::monomial(order, degree, T(1)));
  }

  const Series<T>& series() const { return series_; }
  int order() const { return series_.order(); }
  const T& coefficient(int n) const { return series_[n]; }

  Genus operator+(const Genus& o) const { return Genus(series_ + o.series_); }
  Genus operator-(const Genus& o) const { return Genus(series_ - o.series_); }
  Genus scaled(const T& a) const { return Genus(series_.scaled(a)); }

  friend bool operator==(const Genus& a, const Genus& b) { return a.series_ == b.series_; }

private:
  Series<T> series_;
};

// Grothendieck-duality involution on genera: S^sigma(x) = -S(-x),
// i.e. a_n -> (-1)^{n+1} a_n.
template <typename T>
Genus<T> sigma_dual(const Genus<T>& g) {
  Series<T> s = g.series();
  for (int n = 0; n <= s.order(); n += 2) s[n] = -s[n];
  return Genus<T>(s);
}

// A theory is self-dual iff the even coefficients of its genus vanish.
// tol must be 0 for exact genera.
template <typename T>
bool is_self_dual(const Genus<T>& g, double tol = 0.0) {
  if (tol < 0) throw std::invalid_argument("is_self_dual: negative tolerance");
  for (int n = 0; n <= g.order(); n += 2) {
    if (tol == 0.0) {
      if (!tcalc::is_zero(g.coefficient(n))) return false;
    } else {
      if (std::abs(to_double(g.coefficient(n))) > tol) return false;
    }
  }
  return true;
}

// ---- Riemann zeta machinery (implemented in genera.cpp) ----

// zeta(-m) as an exact rational, from Bernoulli numbers.
Rational zeta_neg(int m);

// Euler-Maclaurin evaluation for s > 1, absolute error well below 1e-12.
double zeta_numeric(double s);
double zeta_prime_numeric(double s);

// Euler-Mascheroni constant, by Euler-Maclaurin summation of H_N.
double euler_gamma();

// zeta(-m) for m >= 1 computed through the functional equation with the
// numeric zeta at m+1; used as a consistency check against zeta_neg.
double zeta_neg_via_functional_equation(int m);

// zeta'(-m) for odd m >= 1, by differentiating the functional equation
// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s) at s = -m.
double zeta_prime_neg(int m);

// Coefficient of x^m/m! in the R-genus: 2 zeta'(-m) + H_m zeta(-m) for odd m,
// 0 for even m.
double r_coefficient(int m);

// The Gillet-Soule R-genus and the Bismut-Kohler genus -R/2, as floating
// genera at the given truncation order.
Genus<double> r_genus(int order);
Genus<double> bk_genus(int order);

}  // namespace tcalc
