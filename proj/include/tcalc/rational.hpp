#pragma once

#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tcalc {

// Arbitrary-precision rational with value semantics, backed by GMP.
// Kept canonical (gcd 1, positive denominator) at all times.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }  // NOLINT: implicit on purpose
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long long n) : Rational(static_cast<long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
  }
  // Accepts "p", "-p", "p/q".
  explicit Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q_)) < 0) {
      mpz_neg(mpq_numref(q_), mpq_numref(q_));
      mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
  }
  Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  double to_double() const { return mpq_get_d(q_); }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  // Canonical "p" or "p/q" text form.
  std::string str() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_t q_;
};

// binom(n, k) for n, k >= 0; 0 when k > n.
inline long long binom_ll(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!mpz_fits_slong_p(z)) {
    mpz_clear(z);
    throw std::overflow_error("binom_ll: result does not fit in long long");
  }
  long long r = mpz_get_si(z);
  mpz_clear(z);
  return r;
}

// binom(m, k) as a polynomial in m: m(m-1)...(m-k+1)/k!, valid for any integer m.
inline Rational binom_poly(long m, int k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (int i = 0; i < k; ++i) num *= Rational(m - i);
  Rational den(1);
  for (int i = 2; i <= k; ++i) den *= Rational(i);
  return num / den;
}

// Scalar shims shared by the exact and floating instantiations of the
// series / cohomology templates.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(long double x) { return x == 0.0L; }
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }
inline double to_double(long double x) { return static_cast<double>(x); }

template <typename T>
T scalar_from_fraction(long num, long den);
template <>
inline Rational scalar_from_fraction<Rational>(long num, long den) { return Rational(num, den); }
template <>
inline double scalar_from_fraction<double>(long num, long den) {
  return static_cast<double>(num) / static_cast<double>(den);
}
template <>
inline long double scalar_from_fraction<long double>(long num, long den) {
  return static_cast<long double>(num) / static_cast<long double>(den);
}

}  // namespace tcalc
