#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcalc/rational.hpp"

namespace tcalc {

// Successive grid refinements failed to stabilise. The CLI maps this to its
// non-convergence exit code.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A smooth interpolation weight h on P^1 with h(0) = 0, h(infinity) = 1,
// given in both affine charts (chart1 is u = 1/t, so chart1(0) = 1).
struct HPreset {
  std::string name;
  bool radial = true;
  std::function<double(std::complex<double>)> chart0;
  std::function<double(std::complex<double>)> chart1;
};

const std::vector<HPreset>& builtin_presets();
const HPreset& preset_by_name(const std::string& name);

// Boundary values, chart agreement on |t| = 1 and finite-difference
// smoothness across the chart at infinity.
bool check_preset(const HPreset& p, double tol = 1e-6);

// a = (1/2 pi i) int_{P^1} log(t tbar) (1/2) dd-bar(h^2); equals 1/2 for
// every admissible h. Computed from the stated integrand: radial presets
// reduce to 1-D integrals with a log kernel, others use a two-chart polar
// tensor grid. Converged when doubling the grid moves the value by < 1e-6.
double quadrature_a(const HPreset& p, int grid = 2048);

// b = (1/2 pi i) int_{P^1} log(t tbar) del h ^ del-bar h; h-dependent.
double quadrature_b(const HPreset& p, int grid = 2048);

// Single-grid evaluations (no refinement check); used for refinement and
// cross-path tests. When force_two_chart is set, radial presets also go
// through the 2-D tensor-grid path.
double quadrature_a_single(const HPreset& p, int grid, bool force_two_chart = false);
double quadrature_b_single(const HPreset& p, int grid, bool force_two_chart = false);

// Disc integrals with the kernel switched off; both vanish identically.
double quadrature_a_zero_kernel(const HPreset& p, int grid);
double quadrature_b_zero_kernel(const HPreset& p, int grid);

// ---- Symbolic singularity engine ----
//
// Formal model of the (3,2)-slice of the integrand
//   ch(F) Td(f) Td(eta) Td^{-1}(L_0) [ -1/2 log|1|_1
//       - 1/6 log|1|_1 c1(L_0) - 1/12 log|1|_1 c1(O(E)_1)
//       + b/3 del(log|1|_1 del-bar log|1|_1) ]
// over the blow-up of a nodal family, which after fiber integration carries
// the log|w| singularity of the torsion.

enum class CurvatureSymbol {
  TangentX,   // c1 of a class pulled back from the total space X
  TangentS,   // c1 pulled back from the base curve S
  L0,         // c1(L_0), L = mu~* O(1) with the induced metric
  U,          // c1(mu~* U), the universal subbundle
  OE,         // c1(O(E)_1), the exceptional divisor
};

enum class TermMarker {
  Plain,
  LogNorm,    // carries log|1|_1
  DdbarTerm,  // the exact term del(log|1|_1 del-bar log|1|_1); implicit factor b
};

struct SingularMonomial {
  Rational coeff;
  TermMarker marker = TermMarker::Plain;
  std::vector<CurvatureSymbol> symbols;  // sorted; symbol degree = size()
};

// A normalised formal sum of singular monomials.
class SingularTerm {
public:
  SingularTerm() = default;

  void add(Rational coeff, TermMarker marker, std::vector<CurvatureSymbol> symbols);
  const std::vector<SingularMonomial>& monomials() const { return monos_; }
  bool is_zero() const { return monos_.empty(); }

private:
  std::vector<SingularMonomial> monos_;
};

// Td(eta) in the push-forward integrand admits several readings off the
// tautological sequence; the engine defaults to the c1-balanced ratio
// Td(U) Td(L_0) Td(T_X)^{-1}, the one reproducing the rk n_p/6 singularity,
// and can emit the other readings for comparison.
enum class EtaReading { Ratio, SubBundle, Quotient, Middle };

// The (3,2)-contributing slice of the integrand for a coefficient sheaf of
// the given rank.
SingularTerm tdm_gamma_terms(int rank, EtaReading reading = EtaReading::Ratio);

// Fiber integration of a SingularTerm: log|1|_1 against c1(O(E)), c1(L_0),
// c1(U) picks up -n_p, +n_p, -n_p times log|w|; pullbacks from X or S and
// the exact ddbar term contribute nothing. Throws on a monomial the rules
// do not reduce.
Rational logw_coefficient_of(const SingularTerm& t, int n_p);

// Coefficient of log|w| in the fiber integral: r n_p / 6.
Rational logw_coefficient(int rank, int n_p, EtaReading reading = EtaReading::Ratio);

// All four Td(eta) readings side by side (diagnostic).
std::map<EtaReading, Rational> eta_reading_coefficients(int rank, int n_p);

// The torsion singularity itself: T^{(1,1)} = -(rk/6) n_p log|w| + O(1).
Rational torsion_singularity_coefficient(int rank, int n_p);

const char* eta_reading_name(EtaReading r);

}  // namespace tcalc
