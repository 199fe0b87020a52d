#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tcalc/rational.hpp"

namespace tcalc {

// Truncated univariate power series over T (Rational for exact work,
// double / long double for floating work). The truncation order is part of
// the value: arithmetic between different orders is an error, never a
// silent coercion. Mixing exact and floating coefficients is ruled out by
// the type itself.
template <typename T>
class Series {
public:
  explicit Series(int order) : order_(check_order(order)), c_(static_cast<size_t>(order) + 1, T(0)) {}

  Series(int order, std::vector<T> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(order_) + 1)
      throw std::invalid_argument("Series: coefficient count must be order+1");
  }

  static Series constant(int order, const T& a0) {
    Series s(order);
    s.c_[0] = a0;
    return s;
  }

  static Series one(int order) { return constant(order, T(1)); }

  // The series x (zero when order is 0).
  static Series identity(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = T(1);
    return s;
  }

  static Series monomial(int order, int degree, const T& a) {
    Series s(order);
    if (degree < 0) throw std::invalid_argument("Series::monomial: negative degree");
    if (degree <= order) s.c_[static_cast<size_t>(degree)] = a;
    return s;
  }

  int order() const { return order_; }
  const std::vector<T>& coefficients() const { return c_; }
  const T& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  T& operator[](int i) { return c_.at(static_cast<size_t>(i)); }

  bool is_zero() const {
    for (const T& x : c_)
      if (!tcalc::is_zero(x)) return false;
    return true;
  }

  // Smallest exponent with nonzero coefficient; order+1 when identically zero.
  int valuation() const {
    for (int i = 0; i <= order_; ++i)
      if (!tcalc::is_zero(c_[static_cast<size_t>(i)])) return i;
    return order_ + 1;
  }

  Series& operator+=(const Series& o) {
    require_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }

  Series scaled(const T& a) const {
    Series r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * a;
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  void require_same_order(const Series& o) const {
    if (order_ != o.order_)
      throw std::invalid_argument("Series: truncation orders differ (" + std::to_string(order_) +
                                  " vs " + std::to_string(o.order_) + ")");
  }

private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    return order;
  }

  int order_;
  std::vector<T> c_;
};

template <typename T>
Series<T> mul(const Series<T>& f, const Series<T>& g) {
  f.require_same_order(g);
  const int n = f.order();
  Series<T> r(n);
  for (int i = 0; i <= n; ++i) {
    if (tcalc::is_zero(f[i])) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

// f / g. When g has a unit constant term this is plain series division at
// the common order. When g vanishes at 0 to order v, the quotient only makes
// sense if f does too, and the result is returned at the reduced order
// order - v (the top coefficients would depend on data beyond the inputs'
// truncation). Dividing by an identically-zero series is an error.
template <typename T>
Series<T> div(const Series<T>& f, const Series<T>& g) {
  f.require_same_order(g);
  const int n = f.order();
  const int v = g.valuation();
  if (v > n) throw std::invalid_argument("Series div: divisor is zero to truncation order");
  if (v > 0 && f.valuation() < v)
    throw std::invalid_argument("Series div: divisor valuation exceeds dividend valuation");
  const int m = n - v;
  Series<T> r(m);
  for (int i = 0; i <= m; ++i) {
    T acc = f[i + v];
    for (int j = 0; j < i; ++j) acc -= r[j] * g[i - j + v];
    r[i] = acc / g[v];
  }
  return r;
}

// f(g(x)); g must have zero constant term (formal substitution).
template <typename T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
  f.require_same_order(g);
  const int n = f.order();
  if (!tcalc::is_zero(g[0]))
    throw std::invalid_argument("Series compose: inner series has nonzero constant term");
  // Horner from the top.
  Series<T> r = Series<T>::constant(n, f[n]);
  for (int i = n - 1; i >= 0; --i) {
    r = mul(r, g);
    r[0] += f[i];
  }
  return r;
}

enum class CombineKind { Add, Mul, Div, Compose };

template <typename T>
Series<T> combine(CombineKind kind, const Series<T>& f, const Series<T>& g) {
  switch (kind) {
    case CombineKind::Add: return f + g;
    case CombineKind::Mul: return mul(f, g);
    case CombineKind::Div: return div(f, g);
    case CombineKind::Compose: return compose(f, g);
  }
  throw std::invalid_argument("combine: unknown kind");
}

// B_m in the convention x/(e^x - 1) = sum B_m x^m / m!  (so B_1 = -1/2).
inline Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli: negative index");
  std::vector<Rational> b(static_cast<size_t>(m) + 1);
  b[0] = Rational(1);
  for (int k = 1; k <= m; ++k) {
    Rational acc(0);
    for (int j = 0; j < k; ++j) acc += Rational(binom_ll(k + 1, j)) * b[static_cast<size_t>(j)];
    b[static_cast<size_t>(k)] = -acc / Rational(k + 1);
  }
  return b[static_cast<size_t>(m)];
}

template <typename T>
T factorial_scalar(int n) {
  T r(1);
  for (int i = 2; i <= n; ++i) r = r * T(i);
  return r;
}

template <typename T>
Series<T> exp_series(int order) {
  Series<T> s(order);
  for (int i = 0; i <= order; ++i) s[i] = T(1) / factorial_scalar<T>(i);
  return s;
}

template <typename T>
Series<T> exp_neg_series(int order) {
  Series<T> s = exp_series<T>(order);
  for (int i = 1; i <= order; i += 2) s[i] = -s[i];
  return s;
}

// e^{kx} for a scalar k.
template <typename T>
Series<T> ch_line_series(int order, const T& k) {
  Series<T> s(order);
  T p(1);
  for (int i = 0; i <= order; ++i) {
    s[i] = p / factorial_scalar<T>(i);
    p = p * k;
  }
  return s;
}

// x/(1 - e^{-x}), computed as the reciprocal of (1 - e^{-x})/x whose
// constant term is 1.
template <typename T>
Series<T> todd_series(int order) {
  Series<T> q(order);
  for (int i = 0; i <= order; ++i) {
    // coefficient of x^i in (1 - e^{-x})/x = (-1)^i / (i+1)!
    T c = T(1) / factorial_scalar<T>(i + 1);
    q[i] = (i % 2 == 0) ? c : -c;
  }
  return div(Series<T>::one(order), q);
}

template <typename T>
Series<T> todd_inv_series(int order) {
  return div(Series<T>::one(order), todd_series<T>(order));
}

enum class StandardSeries { Exp, ExpNeg, Todd, ToddInv };

template <typename T>
Series<T> standard_series(StandardSeries name, int order) {
  switch (name) {
    case StandardSeries::Exp: return exp_series<T>(order);
    case StandardSeries::ExpNeg: return exp_neg_series<T>(order);
    case StandardSeries::Todd: return todd_series<T>(order);
    case StandardSeries::ToddInv: return todd_inv_series<T>(order);
  }
  throw std::invalid_argument("standard_series: unknown name");
}

}  // namespace tcalc
