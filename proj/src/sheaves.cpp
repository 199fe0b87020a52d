#include "tcalc/sheaves.hpp"

#include <algorithm>

namespace tcalc {

long long coh_dim(int n, int a, int q) {
  if (q < 0 || q > n) throw std::invalid_argument("coh_dim: q out of range [0, n]");
  if (q == 0 && a >= 0) return binom_ll(n + a, n);
  if (q == n && a <= -n - 1) return binom_ll(-a - 1, n);  // Serre duality
  return 0;
}

long long h0(const SplitSheaf& f) {
  long long s = 0;
  for (const auto& [a, m] : f.terms) s += m * coh_dim(f.n, a, 0);
  return s;
}

long long euler_characteristic(const SplitSheaf& f) {
  long long chi = 0;
  for (const auto& [a, m] : f.terms)
    for (int q = 0; q <= f.n; ++q) {
      const long long d = m * coh_dim(f.n, a, q);
      chi += (q % 2 == 0) ? d : -d;
    }
  return chi;
}

bool is_regular(const SplitSheaf& f) {
  for (const auto& [a, m] : f.terms) {
    (void)m;
    for (int q = 1; q <= f.n; ++q)
      if (coh_dim(f.n, a - q, q) != 0) return false;
  }
  return true;
}

int regularity_threshold(const SplitSheaf& f) {
  if (f.empty()) throw std::invalid_argument("regularity_threshold: zero sheaf");
  int mn = f.terms.front().first;
  for (const auto& [a, m] : f.terms) {
    (void)m;
    mn = std::min(mn, a);
  }
  return -mn;
}

std::vector<long long> resolution_rank_recursion(const SplitSheaf& f, int upto) {
  if (!is_regular(f)) throw std::invalid_argument("resolution ranks: sheaf is not regular");
  const int n = f.n;
  std::vector<long long> r(static_cast<size_t>(upto) + 1, 0);
  for (int k = 0; k <= upto; ++k) {
    // Alternating rank sum of the k-th exact sequence is zero:
    // r_k = sum_{j=1}^{k} (-1)^{j+1} binom(n+j, n) r_{k-j} + (-1)^k h^0(F(k)).
    long long v = 0;
    for (int j = 1; j <= k; ++j) {
      const long long c = binom_ll(n + j, n) * r[static_cast<size_t>(k - j)];
      v += (j % 2 == 1) ? c : -c;
    }
    const long long h = h0(f.twisted(k));
    v += (k % 2 == 0) ? h : -h;
    if (v < 0) throw std::logic_error("resolution ranks: negative solved rank");
    r[static_cast<size_t>(k)] = v;
  }
  return r;
}

std::vector<long long> canonical_resolution_ranks(const SplitSheaf& f) {
  return resolution_rank_recursion(f, f.n);
}

bool verify_resolution_ch(const SplitSheaf& f) {
  const std::vector<long long> r = canonical_resolution_ranks(f);
  RingPtr ring = Ring::projective(f.n);
  CohClass<Rational> h = CohClass<Rational>::generator(ring, 0);
  CohClass<Rational> ch_f(ring);
  for (const auto& [a, m] : f.terms)
    ch_f += exp_nilpotent(h.scaled(Rational(a))).scaled(Rational(m));
  CohClass<Rational> ch_res(ring);
  for (int i = 0; i <= f.n; ++i) {
    CohClass<Rational> term =
        exp_nilpotent(h.scaled(Rational(-i))).scaled(Rational(r[static_cast<size_t>(i)]));
    if (i % 2 == 0) ch_res += term;
    else            ch_res -= term;
  }
  return ch_f == ch_res;
}

KoszulComplex koszul_complex(int n, int k) {
  KoszulComplex kc;
  RingPtr ring = Ring::projective(n);
  CohClass<Rational> h = CohClass<Rational>::generator(ring, 0);
  CohClass<Rational> sum(ring);
  for (int i = 0; i <= n + 1; ++i) {
    const long long rk = binom_ll(n + 1, i);
    kc.terms.emplace_back(rk, k - i);
    CohClass<Rational> term = exp_nilpotent(h.scaled(Rational(k - i))).scaled(Rational(rk));
    if (i % 2 == 0) sum += term;
    else            sum -= term;
  }
  kc.ch_sum_vanishes = sum.is_zero();
  return kc;
}

}  // namespace tcalc
