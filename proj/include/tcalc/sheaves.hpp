#pragma once

#include <vector>

#include "tcalc/cohomology.hpp"

namespace tcalc {

// A direct sum of line-bundle twists on P^n over a point. The split case is
// the computable shadow of the regular-sheaf calculus: every cohomological
// quantity is exact finite data.
struct SplitSheaf {
  int n = 0;                                // ambient projective dimension
  std::vector<std::pair<int, int>> terms;   // (twist a, multiplicity m > 0)

  SplitSheaf(int dim, std::vector<std::pair<int, int>> t) : n(dim), terms(std::move(t)) {
    if (n < 0) throw std::invalid_argument("SplitSheaf: negative dimension");
    for (const auto& [a, m] : terms) {
      (void)a;
      if (m <= 0) throw std::invalid_argument("SplitSheaf: multiplicities must be positive");
    }
  }

  bool empty() const { return terms.empty(); }

  SplitSheaf twisted(int k) const {
    SplitSheaf f = *this;
    for (auto& [a, m] : f.terms) {
      (void)m;
      a += k;
    }
    return f;
  }

  long long rank() const {
    long long r = 0;
    for (const auto& [a, m] : terms) {
      (void)a;
      r += m;
    }
    return r;
  }
};

// h^q(P^n, O(a)).
long long coh_dim(int n, int a, int q);

// h^0 of a split sheaf.
long long h0(const SplitSheaf& f);

// chi(F) from the cohomology dimensions.
long long euler_characteristic(const SplitSheaf& f);

// Castelnuovo-Mumford: R^q pi_* F(-q) = 0 for all q > 0.
bool is_regular(const SplitSheaf& f);

// Minimal d with F(d) regular; for split sheaves this is -min twist.
int regularity_threshold(const SplitSheaf& f);

// Ranks [r_0, ..., r_n] of the canonical-resolution terms G_k, solved from
// the exact sequences 0 -> G_k -> G_{k-1} (x) Sym^1 V* -> ... ->
// G_0 (x) Sym^k V* -> H^0(F(k)) -> 0. Extending past k = n must give zeros;
// a negative solved rank can only mean a bug or a non-regular input and
// raises instead of clamping.
std::vector<long long> canonical_resolution_ranks(const SplitSheaf& f);

// The same recursion carried to k = upto (upto may exceed n).
std::vector<long long> resolution_rank_recursion(const SplitSheaf& f, int upto);

// ch(F) = sum_i (-1)^i r_i e^{-i h} in H*(P^n; Q).
bool verify_resolution_ch(const SplitSheaf& f);

// The twisted Koszul complex K(k) on P^n: term i has rank binom(n+1, i) and
// twist k - i, for i = 0..n+1.
struct KoszulComplex {
  std::vector<std::pair<long long, int>> terms;  // (rank, twist)
  bool ch_sum_vanishes = false;
};
KoszulComplex koszul_complex(int n, int k);

}  // namespace tcalc
