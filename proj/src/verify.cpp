#include "tcalc/verify.hpp"

#include <random>
#include <sstream>

#include "tcalc/sheaves.hpp"
#include "tcalc/torsion.hpp"

namespace tcalc {

namespace {

using Rng = std::mt19937;

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

Genus<Rational> random_genus(Rng& rng, int order) {
  Series<Rational> s(order);
  for (int i = 0; i <= order; ++i) s[i] = random_rational(rng);
  return Genus<Rational>(std::move(s));
}

VirtualBundle<Rational> random_bundle(Rng& rng) {
  std::uniform_int_distribution<int> ndist(1, 4);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> mult(-2, 3);
  std::uniform_int_distribution<int> twist(-3, 3);
  std::uniform_int_distribution<int> shift(-2, 2);
  for (;;) {
    RingPtr ring = Ring::projective(ndist(rng));
    VirtualBundle<Rational> b(ring, shift(rng));
    const int nt = terms(rng);
    for (int i = 0; i < nt; ++i) {
      int m = mult(rng);
      if (m == 0) m = 1;
      b.add_term(m, CohClass<Rational>::generator(ring, 0).scaled(Rational(twist(rng))));
    }
    if (std::abs(b.rank()) <= 5) return b;
  }
}

long long default_binom(int n, int k) { return binom_ll(n, k); }

std::string describe(const char* fmt, long a, long b, long c = 0) {
  std::ostringstream os;
  os << fmt << " n=" << a << " k=" << b;
  if (c != 0) os << " aux=" << c;
  return os.str();
}

std::vector<CheckResult> suite_recursion(const SuiteOptions& opts) {
  const int max_n = opts.max_n < 0 ? 5 : opts.max_n;
  auto binom = opts.binom ? opts.binom : default_binom;
  Rng rng(opts.seed);
  const Genus<Rational> s = random_genus(rng, 5);
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    CheckResult r{"recursion n=" + std::to_string(n), true, ""};
    for (long k = -n - 5; k <= 5 && r.pass; ++k) {
      Rational acc(0);
      for (int j = 0; j <= n + 1; ++j) {
        Rational term = Rational(binom(n + 1, j)) * delta_t(s, n, k - j);
        acc += (j % 2 == 0) ? term : -term;
      }
      if (!acc.is_zero()) {
        r.pass = false;
        r.detail = describe("nonzero recursion residual", n, k) + " value=" + acc.str();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> suite_classification(const SuiteOptions& opts) {
  const int max_n = opts.max_n < 0 ? 4 : std::min(opts.max_n, 4);
  Rng rng(opts.seed);
  std::vector<std::pair<std::string, Genus<Rational>>> exact = {
      {"x", Genus<Rational>::power(5, 1)},
      {"x^2", Genus<Rational>::power(5, 2)},
      {"x^3", Genus<Rational>::power(5, 3)},
      {"random", random_genus(rng, 5)},
  };
  std::vector<CheckResult> out;
  for (const auto& [label, g] : exact) {
    CheckResult r{"classification " + label, true, ""};
    for (int n = 0; n <= max_n && r.pass; ++n) {
      if (!verify_classification_identity(g, n)) {
        r.pass = false;
        r.detail = describe("classification identity failed", n, 0);
      }
    }
    out.push_back(std::move(r));
  }
  CheckResult rbk{"classification BK(9)", true, ""};
  const Genus<double> bk = bk_genus(9);
  for (int n = 0; n <= max_n && rbk.pass; ++n) {
    if (!verify_classification_identity(bk, n, 1e-9)) {
      rbk.pass = false;
      rbk.detail = describe("classification identity failed for BK genus", n, 0);
    }
  }
  out.push_back(std::move(rbk));
  return out;
}

std::vector<CheckResult> suite_sigma(const SuiteOptions& opts) {
  Rng rng(opts.seed);
  CheckResult r{"sigma identities (100 random virtual bundles)", true, ""};
  for (int i = 0; i < 100 && r.pass; ++i) {
    const auto b = random_bundle(rng);
    if (!verify_sigma_identities(b)) {
      r.pass = false;
      r.detail = "failed on bundle #" + std::to_string(i) + " over P^" +
                 std::to_string(b.ring()->factor_dim(0)) + " rank " + std::to_string(b.rank());
    }
  }
  return {r};
}

std::vector<CheckResult> suite_grr(const SuiteOptions& opts) {
  const int max_n = opts.max_n < 0 ? 6 : opts.max_n;
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    CheckResult r{"grr n=" + std::to_string(n), true, ""};
    for (long k = -n - 5; k <= 6 && r.pass; ++k) {
      const Rational lhs = grr_chi(n, k);
      const Rational rhs = binom_poly(n + k, n);
      if (lhs != rhs) {
        r.pass = false;
        r.detail = describe("grr_chi mismatch", n, k) + " got=" + lhs.str() + " want=" + rhs.str();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> suite_koszul(const SuiteOptions& opts) {
  const int max_n = opts.max_n < 0 ? 6 : opts.max_n;
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    CheckResult r{"koszul n=" + std::to_string(n), true, ""};
    for (int k = -5; k <= 5 && r.pass; ++k) {
      if (!koszul_complex(n, k).ch_sum_vanishes) {
        r.pass = false;
        r.detail = describe("koszul alternating ch sum nonzero", n, k);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> suite_resolution(const SuiteOptions& opts) {
  const int max_n = opts.max_n < 0 ? 6 : opts.max_n;
  Rng rng(opts.seed);
  std::vector<CheckResult> out;

  CheckResult r1{"resolution O(1) ranks", true, ""};
  for (int n = 1; n <= max_n && r1.pass; ++n) {
    const SplitSheaf f(n, {{1, 1}});
    const auto ranks = canonical_resolution_ranks(f);
    for (int k = 0; k <= n; ++k) {
      if (ranks[static_cast<size_t>(k)] != binom_ll(n + 1, k + 1)) {
        r1.pass = false;
        r1.detail = describe("rank mismatch for O(1)", n, k) + " got=" +
                    std::to_string(ranks[static_cast<size_t>(k)]);
        break;
      }
    }
  }
  out.push_back(std::move(r1));

  CheckResult r2{"resolution ch on 50 random regular sheaves", true, ""};
  std::uniform_int_distribution<int> ndist(1, 4);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> twist(0, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int i = 0; i < 50 && r2.pass; ++i) {
    std::vector<std::pair<int, int>> ts;
    const int nt = terms(rng);
    for (int j = 0; j < nt; ++j) ts.emplace_back(twist(rng), mult(rng));
    const SplitSheaf f(ndist(rng), std::move(ts));
    if (!is_regular(f)) {
      r2.pass = false;
      r2.detail = "generator produced a non-regular sheaf (#" + std::to_string(i) + ")";
      break;
    }
    if (!verify_resolution_ch(f)) {
      r2.pass = false;
      r2.detail = "resolution ch mismatch on sheaf #" + std::to_string(i);
    }
    const auto ext = resolution_rank_recursion(f, f.n + 1);
    if (ext.back() != 0) {
      r2.pass = false;
      r2.detail = "resolution does not terminate at n for sheaf #" + std::to_string(i);
    }
  }
  out.push_back(std::move(r2));
  return out;
}

std::vector<CheckResult> suite_closedness(const SuiteOptions& opts) {
  const int max_n = opts.max_n < 0 ? 3 : std::min(opts.max_n, 3);
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n) {
    CheckResult r{"closedness n=" + std::to_string(n), verify_thm15_closedness(n), ""};
    if (!r.pass) r.detail = describe("closedness chain failed", n, 0);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> suite_derham(const SuiteOptions& opts) {
  const int max_d = opts.max_n < 0 ? 8 : opts.max_n;
  std::vector<CheckResult> out;
  for (int d = 0; d <= max_d; d += 2) {
    CheckResult r{"derham d=" + std::to_string(d), true, ""};
    const auto got = de_rham_pushforward<Rational>(d);
    RingPtr base = Ring::product({d});
    CohClass<Rational> want(base);
    want.set_coefficient(d, Rational(-2));  // -2 l^d
    if (got != want) {
      r.pass = false;
      r.detail = describe("de Rham pushforward mismatch", d, 0);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> suite_selfdual(const SuiteOptions& opts) {
  std::vector<CheckResult> out;
  Rng rng(opts.seed);

  CheckResult r1{"R-genus even coefficients vanish (order 12)", true, ""};
  const Genus<double> r12 = r_genus(12);
  for (int n = 0; n <= 12; n += 2) {
    if (r12.coefficient(n) != 0.0) {
      r1.pass = false;
      r1.detail = "even coefficient " + std::to_string(n) + " nonzero";
    }
  }
  out.push_back(std::move(r1));

  out.push_back({"R-genus self-dual at 1e-12", is_self_dual(r_genus(9), 1e-12), ""});

  CheckResult r3{"sigma_dual involution", true, ""};
  const Genus<Rational> g = random_genus(rng, 6);
  if (sigma_dual(sigma_dual(g)) != g) {
    r3.pass = false;
    r3.detail = "sigma_dual applied twice changed the genus";
  }
  out.push_back(std::move(r3));

  CheckResult r4{"BK theory equals its dual (1e-10)", true, ""};
  const Genus<double> bk = bk_genus(6);
  for (int n = 1; n <= 2 && r4.pass; ++n)
    for (long k = -2; k <= 2 && r4.pass; ++k) {
      const double a = delta_t(bk, n, k);
      const double b = dual_theory_delta(bk, n, k);
      if (std::abs(a - b) > 1e-10) {
        r4.pass = false;
        r4.detail = describe("dual table mismatch", n, k);
      }
    }
  out.push_back(std::move(r4));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "recursion", "classification", "sigma", "grr", "koszul",
      "resolution", "closedness", "derham", "selfdual"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "recursion") return suite_recursion(opts);
  if (suite == "classification") return suite_classification(opts);
  if (suite == "sigma") return suite_sigma(opts);
  if (suite == "grr") return suite_grr(opts);
  if (suite == "koszul") return suite_koszul(opts);
  if (suite == "resolution") return suite_resolution(opts);
  if (suite == "closedness") return suite_closedness(opts);
  if (suite == "derham") return suite_derham(opts);
  if (suite == "selfdual") return suite_selfdual(opts);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const std::string& name : suite_names()) {
      auto part = run_suite(name, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace tcalc
