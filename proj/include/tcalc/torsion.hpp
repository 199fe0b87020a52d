#pragma once

#include <functional>
#include <map>

#include "tcalc/cohomology.hpp"

namespace tcalc {

// Theory-difference characteristic numbers relative to the homogeneous
// theory:
//   Delta t_{n,k}(S) = -pi_*( ch(O(k)) Td(T_pi) S(T_pi) )  on P^n -> pt.
// The main values are k = -n..0; the same closed form extends to all k and
// agrees with the order-(n+1) recurrence (Koszul vanishing).
template <typename T>
T delta_t(const Genus<T>& s, int n, long k) {
  if (n < 0) throw std::invalid_argument("delta_t: n >= 0");
  RingPtr ring = Ring::projective(n);
  auto tangent = VirtualBundle<T>::tangent(ring, 0);
  CohClass<T> h = CohClass<T>::generator(ring, 0);
  CohClass<T> cls =
      exp_nilpotent(h.scaled(T(k))) * todd_eval(tangent) * genus_eval(s, tangent);
  return -cls.top_coefficient();
}

// Delta t for the Bismut-Kohler genus -R/2; the series truncation must reach
// the top degree of P^n.
inline double bk_delta_t(int n, long k, int order) {
  if (order < n) throw PrecisionError("bk_delta_t: truncation order below dimension");
  return delta_t(bk_genus(order), n, k);
}

// The dual theory's numbers are those of the dual genus -S(-x).
template <typename T>
T dual_theory_delta(const Genus<T>& s, int n, long k) {
  return delta_t(sigma_dual(s), n, k);
}

// sum_{j=0}^{n+1} (-1)^j binom(n+1, j) Delta t_{n, k-j}; zero for every k
// because the theory-dependent side of the inductive formula cancels in
// differences.
template <typename T>
T homogeneous_recursion_residual(const Genus<T>& s, int n, long k) {
  T acc(0);
  for (int j = 0; j <= n + 1; ++j) {
    T term = T(binom_ll(n + 1, j)) * delta_t(s, n, k - j);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

template <typename T>
bool verify_homogeneous_recursion(const Genus<T>& s, int n, long k_min, long k_max,
                                  double tol = 1e-10) {
  for (long k = k_min; k <= k_max; ++k) {
    const T r = homogeneous_recursion_residual(s, n, k);
    if constexpr (std::is_same_v<T, Rational>) {
      if (!r.is_zero()) return false;
    } else {
      if (std::abs(to_double(r)) > tol) return false;
    }
  }
  return true;
}

// Classification identity in cohomology (the equation whose unique solution
// pins down the compatible characteristic numbers):
//   sum_i (-1)^i Delta t_{n,-i} ch(Lambda^i Q^vee) + S(T_{P^n}) = 0.
template <typename T>
CohClass<T> classification_residual(const Genus<T>& s, int n) {
  RingPtr ring = Ring::projective(n);
  CohClass<T> acc(ring);
  for (int i = 0; i <= n; ++i) {
    CohClass<T> term = lambda_q_dual_ch<T>(ring, 0, n, i).scaled(delta_t(s, n, -i));
    if (i % 2 == 0) acc += term;
    else            acc -= term;
  }
  return acc + genus_eval(s, VirtualBundle<T>::tangent(ring, 0));
}

template <typename T>
bool verify_classification_identity(const Genus<T>& s, int n, double tol = 1e-10) {
  const CohClass<T> r = classification_residual(s, n);
  if constexpr (std::is_same_v<T, Rational>) return r.is_zero();
  else return r.max_abs_coefficient() <= tol;
}

// Uniqueness mechanics of the inductive formula: the order-(n+1) linear
// recurrence sum_j (-1)^j binom(n+1,j) t_{k-j} = rhs(k) propagated forward
// and backward from the main values t_{-n}, ..., t_0.
template <typename T>
T propagate_characteristic_numbers(int n, const std::vector<T>& seed,
                                   const std::function<T(long)>& rhs, long k_target) {
  if (static_cast<int>(seed.size()) != n + 1)
    throw std::invalid_argument("propagate: seed must have n+1 values for k = -n..0");
  std::map<long, T> table;
  for (int i = 0; i <= n; ++i) table.emplace(-n + i, seed[static_cast<size_t>(i)]);
  // forward: t_k = rhs(k) - sum_{j=1}^{n+1} (-1)^j binom(n+1,j) t_{k-j}
  for (long k = 1; k <= k_target; ++k) {
    T acc = rhs(k);
    for (int j = 1; j <= n + 1; ++j) {
      T term = T(binom_ll(n + 1, j)) * table.at(k - j);
      acc += (j % 2 == 0) ? -term : term;
    }
    table.emplace(k, acc);
  }
  // backward: t_{k-n-1} = (-1)^{n+1} [ rhs(k) - sum_{j=0}^{n} (-1)^j binom(n+1,j) t_{k-j} ]
  for (long low = -n - 1; low >= k_target; --low) {
    const long k = low + n + 1;
    T acc = rhs(k);
    for (int j = 0; j <= n; ++j) {
      T term = T(binom_ll(n + 1, j)) * table.at(k - j);
      acc += (j % 2 == 0) ? -term : term;
    }
    if ((n + 1) % 2 != 0) acc = -acc;
    table.emplace(low, acc);
  }
  return table.at(k_target);
}

// A computed table of theory differences for one genus and one dimension.
// Every complete length-(n+2) window of the table satisfies the homogeneous
// recurrence; satisfies_recursion checks that invariant.
template <typename T>
struct TorsionDelta {
  Genus<T> genus;
  int n;
  std::map<long, T> entries;

  bool satisfies_recursion(double tol = 1e-10) const {
    for (const auto& [k, unused] : entries) {
      (void)unused;
      bool window = true;
      for (int j = 0; j <= n + 1 && window; ++j) window = entries.count(k - j) > 0;
      if (!window) continue;
      T acc(0);
      for (int j = 0; j <= n + 1; ++j) {
        T term = T(binom_ll(n + 1, j)) * entries.at(k - j);
        acc += (j % 2 == 0) ? term : -term;
      }
      if constexpr (std::is_same_v<T, Rational>) {
        if (!acc.is_zero()) return false;
      } else {
        if (std::abs(to_double(acc)) > tol) return false;
      }
    }
    return true;
  }
};

template <typename T>
TorsionDelta<T> build_delta_table(const Genus<T>& s, int n, long k_min, long k_max) {
  TorsionDelta<T> t{s, n, {}};
  for (long k = k_min; k <= k_max; ++k) t.entries.emplace(k, delta_t(s, n, k));
  return t;
}

}  // namespace tcalc
