// torsioncalc: genus tables, torsion characteristic-number differences,
// identity verification suites and degeneration constants on the command
// line. Exact values print as p/q; floating values with 15 significant
// digits under --json.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcalc/degeneration.hpp"
#include "tcalc/genus_spec.hpp"
#include "tcalc/json_out.hpp"
#include "tcalc/torsion.hpp"
#include "tcalc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitNoConvergence = 4;

int thread_count() {
  if (const char* env = std::getenv("TORSIONCALC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// Deterministic parallel map: out[i] = f(i), output order independent of the
// thread count.
template <typename F>
void parallel_for(int n, F&& f) {
  const int threads = std::min(thread_count(), std::max(n, 1));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct GenusCmd {
  std::string spec;
  int order = -1;
  bool json = false;
};

struct DeltaCmd {
  std::string spec;
  int n = 0;
  std::optional<long> k;
  std::optional<long> k_min, k_max;
  bool json = false;
};

struct VerifyCmd {
  std::string suite = "all";
  int max_n = -1;
  unsigned seed = 12345;
  bool json = false;
  bool inject_fault = false;
};

struct QuadCmd {
  std::string preset = "rational1";
  int grid = 2048;
  bool json = false;
};

struct CoeffCmd {
  int rank = 0;
  int np = 1;
  bool diagnose_eta = false;
  bool json = false;
};

nlohmann::ordered_json coefficients_json(const tcalc::GenusValue& g) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (std::holds_alternative<tcalc::Genus<tcalc::Rational>>(g)) {
    const auto& e = std::get<tcalc::Genus<tcalc::Rational>>(g);
    for (int i = 0; i <= e.order(); ++i) arr.push_back(e.coefficient(i).str());
  } else {
    const auto& e = std::get<tcalc::Genus<double>>(g);
    for (int i = 0; i <= e.order(); ++i) arr.push_back(e.coefficient(i));
  }
  return arr;
}

int run_genus(const GenusCmd& cmd) {
  const tcalc::GenusSpec spec = tcalc::parse_genus_spec(cmd.spec);
  std::optional<int> order;
  if (cmd.order >= 0) order = cmd.order;
  const tcalc::GenusValue g = tcalc::evaluate_genus_spec(spec, order);
  if (cmd.json) {
    nlohmann::ordered_json j;
    j["genus"] = cmd.spec;
    j["order"] = tcalc::genus_order(g);
    j["numeric"] = tcalc::genus_is_numeric(g);
    j["coefficients"] = coefficients_json(g);
    std::cout << tcalc::canonical_json(j) << "\n";
    return kExitOk;
  }
  std::cout << "[";
  if (std::holds_alternative<tcalc::Genus<tcalc::Rational>>(g)) {
    const auto& e = std::get<tcalc::Genus<tcalc::Rational>>(g);
    for (int i = 0; i <= e.order(); ++i) std::cout << (i ? ", " : "") << e.coefficient(i);
  } else {
    const auto& e = std::get<tcalc::Genus<double>>(g);
    for (int i = 0; i <= e.order(); ++i)
      std::cout << (i ? ", " : "") << tcalc::format_double15(e.coefficient(i));
  }
  std::cout << "]\n";
  return kExitOk;
}

int run_delta(const DeltaCmd& cmd) {
  if (cmd.n < 0) throw std::invalid_argument("torsion-delta: n must be nonnegative");
  long lo, hi;
  if (cmd.k) {
    lo = hi = *cmd.k;
  } else if (cmd.k_min && cmd.k_max) {
    lo = *cmd.k_min;
    hi = *cmd.k_max;
    if (lo > hi) throw std::invalid_argument("torsion-delta: empty k range");
  } else {
    throw std::invalid_argument("torsion-delta: give --k or both --k-min and --k-max");
  }

  const tcalc::GenusSpec spec = tcalc::parse_genus_spec(cmd.spec);
  const tcalc::GenusValue g = tcalc::evaluate_genus_spec(spec);
  if (tcalc::genus_is_numeric(g) && tcalc::genus_order(g) < cmd.n)
    throw tcalc::PrecisionError("torsion-delta: numeric genus truncation order below n");

  const int count = static_cast<int>(hi - lo + 1);
  std::vector<std::string> exact_vals(static_cast<size_t>(count));
  std::vector<double> num_vals(static_cast<size_t>(count));
  const bool numeric = tcalc::genus_is_numeric(g);
  parallel_for(count, [&](int i) {
    const long k = lo + i;
    if (numeric)
      num_vals[static_cast<size_t>(i)] = tcalc::delta_t(std::get<tcalc::Genus<double>>(g), cmd.n, k);
    else
      exact_vals[static_cast<size_t>(i)] =
          tcalc::delta_t(std::get<tcalc::Genus<tcalc::Rational>>(g), cmd.n, k).str();
  });

  if (cmd.json) {
    nlohmann::ordered_json j;
    j["genus"] = cmd.spec;
    j["n"] = cmd.n;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < count; ++i) {
      nlohmann::ordered_json e;
      e["k"] = lo + i;
      if (numeric) e["value"] = num_vals[static_cast<size_t>(i)];
      else         e["value"] = exact_vals[static_cast<size_t>(i)];
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    std::cout << tcalc::canonical_json(j) << "\n";
    return kExitOk;
  }
  for (int i = 0; i < count; ++i) {
    std::cout << (lo + i) << "\t";
    if (numeric) std::cout << tcalc::format_double15(num_vals[static_cast<size_t>(i)]);
    else         std::cout << exact_vals[static_cast<size_t>(i)];
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verify(const VerifyCmd& cmd) {
  tcalc::SuiteOptions opts;
  opts.max_n = cmd.max_n;
  opts.seed = cmd.seed;
  if (cmd.inject_fault) {
    opts.binom = [](int n, int k) {
      long long v = tcalc::binom_ll(n, k);
      return (n == 3 && k == 1) ? v + 1 : v;
    };
  }
  const auto results = tcalc::run_suite(cmd.suite, opts);
  if (cmd.json) {
    nlohmann::ordered_json j;
    j["suite"] = cmd.suite;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      if (!r.detail.empty()) c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["pass"] = tcalc::all_pass(results);
    std::cout << tcalc::canonical_json(j) << "\n";
    return tcalc::all_pass(results) ? kExitOk : kExitVerifyFail;
  }
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "PASS " << r.name << "\n";
    } else {
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
      return kExitVerifyFail;
    }
  }
  return kExitOk;
}

int run_quadrature(const QuadCmd& cmd, bool constant_a) {
  const tcalc::HPreset& p = tcalc::preset_by_name(cmd.preset);
  const double v = constant_a ? tcalc::quadrature_a(p, cmd.grid) : tcalc::quadrature_b(p, cmd.grid);
  if (cmd.json) {
    nlohmann::ordered_json j;
    j["constant"] = constant_a ? "a" : "b";
    j["preset"] = cmd.preset;
    j["grid"] = cmd.grid;
    j["value"] = v;
    std::cout << tcalc::canonical_json(j) << "\n";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::cout << buf << "\n";
  }
  return kExitOk;
}

int run_coeff(const CoeffCmd& cmd) {
  if (cmd.rank < 0 || cmd.np < 1)
    throw std::invalid_argument("degeneration coeff: need rank >= 0 and np >= 1");
  const tcalc::Rational v = tcalc::torsion_singularity_coefficient(cmd.rank, cmd.np);
  if (cmd.json) {
    nlohmann::ordered_json j;
    j["rank"] = cmd.rank;
    j["np"] = cmd.np;
    j["value"] = v.str();
    if (cmd.diagnose_eta) {
      nlohmann::ordered_json d;
      for (const auto& [reading, c] : tcalc::eta_reading_coefficients(cmd.rank, cmd.np))
        d[tcalc::eta_reading_name(reading)] = c.str();
      j["eta_readings"] = std::move(d);
    }
    std::cout << tcalc::canonical_json(j) << "\n";
    return kExitOk;
  }
  std::cout << v << "\n";
  if (cmd.diagnose_eta) {
    for (const auto& [reading, c] : tcalc::eta_reading_coefficients(cmd.rank, cmd.np))
      std::cout << "log|w| coefficient under " << tcalc::eta_reading_name(reading)
                << " reading: " << c << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytic-torsion characteristic numbers and identities"};
  app.require_subcommand(1);

  GenusCmd genus_cmd;
  auto* genus = app.add_subcommand("genus", "print genus coefficients");
  genus->add_option("--spec", genus_cmd.spec, "genus spec (zero|R:n|BK:n|poly:...|scale:p/q:...)")
      ->required();
  genus->add_option("--order", genus_cmd.order, "truncation order override");
  genus->add_flag("--json", genus_cmd.json, "machine-readable output");

  DeltaCmd delta_cmd;
  auto* delta = app.add_subcommand("torsion-delta",
                                   "theory-difference characteristic numbers on P^n");
  delta->add_option("--spec", delta_cmd.spec, "genus spec")->required();
  delta->add_option("--n", delta_cmd.n, "projective dimension")->required();
  long kval = 0, kmin = 0, kmax = 0;
  auto* kopt = delta->add_option("--k", kval, "single twist k");
  auto* kminopt = delta->add_option("--k-min", kmin, "range start");
  auto* kmaxopt = delta->add_option("--k-max", kmax, "range end");
  kopt->excludes(kminopt)->excludes(kmaxopt);
  delta->add_flag("--json", delta_cmd.json, "machine-readable output");

  VerifyCmd verify_cmd;
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  verify->add_option("--suite", verify_cmd.suite, "suite name or 'all'")
      ->check(CLI::IsMember([] {
        std::vector<std::string> v = tcalc::suite_names();
        v.push_back("all");
        return v;
      }()));
  verify->add_option("--max-n", verify_cmd.max_n, "dimension bound override");
  verify->add_option("--seed", verify_cmd.seed, "seed for randomized checks");
  verify->add_flag("--json", verify_cmd.json, "machine-readable output");
  verify->add_flag("--inject-fault", verify_cmd.inject_fault)->group("");  // failure-path hook

  auto* degen = app.add_subcommand("degeneration", "nodal-degeneration constants");
  degen->require_subcommand(1);
  QuadCmd qa_cmd, qb_cmd;
  auto* qa = degen->add_subcommand("a", "universal constant a (= 1/2)");
  qa->add_option("--preset", qa_cmd.preset, "interpolation weight preset");
  qa->add_option("--grid", qa_cmd.grid, "base grid resolution");
  qa->add_flag("--json", qa_cmd.json);
  auto* qb = degen->add_subcommand("b", "h-dependent constant b");
  qb->add_option("--preset", qb_cmd.preset, "interpolation weight preset");
  qb->add_option("--grid", qb_cmd.grid, "base grid resolution");
  qb->add_flag("--json", qb_cmd.json);
  CoeffCmd coeff_cmd;
  auto* coeff = degen->add_subcommand("coeff", "log|w| coefficient of the torsion singularity");
  coeff->add_option("--rank", coeff_cmd.rank, "rank of the coefficient sheaf")->required();
  coeff->add_option("--np", coeff_cmd.np, "number of nodes over the point")->required();
  coeff->add_flag("--diagnose-eta", coeff_cmd.diagnose_eta, "show all Td(eta) readings");
  coeff->add_flag("--json", coeff_cmd.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (genus->parsed()) return run_genus(genus_cmd);
    if (delta->parsed()) {
      if (kopt->count()) delta_cmd.k = kval;
      if (kminopt->count()) delta_cmd.k_min = kmin;
      if (kmaxopt->count()) delta_cmd.k_max = kmax;
      return run_delta(delta_cmd);
    }
    if (verify->parsed()) return run_verify(verify_cmd);
    if (qa->parsed()) return run_quadrature(qa_cmd, true);
    if (qb->parsed()) return run_quadrature(qb_cmd, false);
    if (coeff->parsed()) return run_coeff(coeff_cmd);
  } catch (const tcalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tcalc::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const tcalc::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
