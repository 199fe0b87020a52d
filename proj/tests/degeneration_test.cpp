#include "tcalc/degeneration.hpp"

#include <cmath>

#include "doctest.h"

using namespace tcalc;

namespace {

bool has_monomial(const SingularTerm& t, TermMarker marker,
                  const std::vector<CurvatureSymbol>& symbols, const Rational& coeff) {
  for (const auto& m : t.monomials())
    if (m.marker == marker && m.symbols == symbols && m.coeff == coeff) return true;
  return false;
}

}  // namespace

TEST_CASE("builtin presets are admissible") {
  for (const HPreset& p : builtin_presets()) {
    INFO(p.name);
    CHECK(check_preset(p));
  }
  CHECK_THROWS_AS(preset_by_name("nope"), std::invalid_argument);
  CHECK(preset_by_name("rational1").radial);
  CHECK_FALSE(preset_by_name("tilted").radial);
}

TEST_CASE("quadrature a equals 1/2 for every preset") {
  for (const char* name : {"rational1", "rational2", "quartic"}) {
    INFO(name);
    CHECK(std::abs(quadrature_a(preset_by_name(name), 1024) - 0.5) < 1e-6);
  }
  // non-radial preset exercises the two-chart tensor grid
  CHECK(std::abs(quadrature_a(preset_by_name("tilted"), 1024) - 0.5) < 1e-6);
}

TEST_CASE("radial reduction and two-chart grid agree") {
  const HPreset& p = preset_by_name("rational1");
  const double radial = quadrature_a_single(p, 1024);
  const double grid = quadrature_a_single(p, 1024, /*force_two_chart=*/true);
  CHECK(std::abs(radial - grid) < 1e-6);
  const double br = quadrature_b_single(p, 1024);
  const double bg = quadrature_b_single(p, 1024, /*force_two_chart=*/true);
  CHECK(std::abs(br - bg) < 1e-6);
}

TEST_CASE("quadrature b: refinement stability and golden values") {
  const HPreset& p1 = preset_by_name("rational1");
  const double b1 = quadrature_b_single(p1, 1024);
  const double b2 = quadrature_b_single(p1, 2048);
  CHECK(std::abs(b1 - b2) < 1e-6);
  // radial oracle: both charts carry the same profile, the two integrals
  // cancel exactly for |t|^2/(1+|t|^2)
  CHECK(std::abs(quadrature_b(p1, 1024)) < 2e-6);
  // rational2 evaluates in closed form to -1/6 (Beta-function derivative)
  CHECK(std::abs(quadrature_b(preset_by_name("rational2"), 1024) - (-1.0 / 6.0)) < 2e-6);
  CHECK(std::abs(quadrature_b(preset_by_name("quartic"), 1024)) < 2e-6);
  // the non-radial preset goes through the tensor grid and must still refine
  CHECK(std::isfinite(quadrature_b(preset_by_name("tilted"), 512)));
}

TEST_CASE("rotation invariance for a radial profile") {
  const HPreset& p = preset_by_name("rational1");
  const double alpha = 0.731;
  HPreset rotated{"rotated", false,
                  [&, alpha](std::complex<double> t) {
                    return p.chart0(t * std::polar(1.0, alpha));
                  },
                  [&, alpha](std::complex<double> u) {
                    return p.chart1(u * std::polar(1.0, -alpha));
                  }};
  const double b_rot = quadrature_b_single(rotated, 1024);
  const double b_ref = quadrature_b_single(p, 1024, /*force_two_chart=*/true);
  CHECK(std::abs(b_rot - b_ref) < 1e-8);
}

TEST_CASE("zero kernel sanity") {
  const HPreset& p = preset_by_name("rational1");
  CHECK(quadrature_a_zero_kernel(p, 256) == 0.0);
  CHECK(quadrature_b_zero_kernel(p, 256) == 0.0);
}

TEST_CASE("non-convergent refinement raises") {
  // A high-frequency ripple aliases on coarse grids, so successive
  // refinements disagree well above the tolerance.
  HPreset wiggle{"wiggle", true,
                 [](std::complex<double> t) {
                   const double base = std::norm(t) / (1.0 + std::norm(t));
                   return base + 2e-3 * std::sin(4e3 * t.real()) * base;
                 },
                 [](std::complex<double> u) {
                   const double base = 1.0 / (1.0 + std::norm(u));
                   return base + 2e-3 * std::sin(4e3 / (std::abs(u) + 1e-30)) * base;
                 }};
  CHECK_THROWS_AS(quadrature_a(wiggle, 64), ConvergenceError);
  CHECK_THROWS_AS(quadrature_a(wiggle, 64), ConvergenceError);
}

TEST_CASE("grid floor") {
  CHECK_THROWS_AS(quadrature_a_single(preset_by_name("rational1"), 16), std::invalid_argument);
}

TEST_CASE("gamma-term expansion") {
  CHECK(tdm_gamma_terms(0).is_zero());

  const SingularTerm t1 = tdm_gamma_terms(1);
  CHECK(has_monomial(t1, TermMarker::LogNorm, {CurvatureSymbol::L0}, Rational(-1, 6)));
  CHECK(has_monomial(t1, TermMarker::LogNorm, {CurvatureSymbol::OE}, Rational(-1, 12)));
  CHECK(has_monomial(t1, TermMarker::DdbarTerm, {}, Rational(1, 3)));  // times b

  // the -1/2 log-norm slice against the degree-1 even part (ratio reading):
  // -(1/4) cU + (1/4) cTS after the cTX and cL0 cancellations
  CHECK(has_monomial(t1, TermMarker::LogNorm, {CurvatureSymbol::U}, Rational(-1, 4)));
  CHECK(has_monomial(t1, TermMarker::LogNorm, {CurvatureSymbol::TangentS}, Rational(1, 4)));
}

TEST_CASE("log|w| coefficient is r n_p / 6") {
  CHECK(logw_coefficient(1, 1) == Rational(1, 6));
  CHECK(logw_coefficient(3, 2) == Rational(1));
  for (int k = 1; k <= 6; ++k) CHECK(logw_coefficient(0, k).is_zero());
  for (int r = 0; r <= 5; ++r)
    for (int np = 1; np <= 5; ++np)
      CHECK(logw_coefficient(r, np) == Rational(r * np, 6));
  CHECK_THROWS_AS(logw_coefficient(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(logw_coefficient(1, 0), std::invalid_argument);
}

TEST_CASE("torsion singularity coefficient") {
  CHECK(torsion_singularity_coefficient(1, 1) == Rational(-1, 6));
  CHECK(torsion_singularity_coefficient(2, 3) == Rational(-1));
  CHECK(torsion_singularity_coefficient(0, 7).is_zero());
}

TEST_CASE("the exact ddbar term never contributes") {
  for (int r = 1; r <= 4; ++r) {
    const SingularTerm full = tdm_gamma_terms(r);
    SingularTerm ablated;
    bool saw_ddbar = false;
    for (const auto& m : full.monomials()) {
      if (m.marker == TermMarker::DdbarTerm) {
        saw_ddbar = true;
        continue;
      }
      ablated.add(m.coeff, m.marker, m.symbols);
    }
    CHECK(saw_ddbar);
    for (int np = 1; np <= 4; ++np)
      CHECK(logw_coefficient_of(ablated, np) == logw_coefficient_of(full, np));
  }
}

TEST_CASE("unreduced monomials are an error") {
  SingularTerm t;
  t.add(Rational(1), TermMarker::LogNorm, {CurvatureSymbol::L0, CurvatureSymbol::OE});
  CHECK_THROWS_AS(logw_coefficient_of(t, 1), std::logic_error);
  SingularTerm t2;
  t2.add(Rational(1), TermMarker::Plain, {CurvatureSymbol::L0});
  CHECK_THROWS_AS(logw_coefficient_of(t2, 1), std::logic_error);
}

TEST_CASE("Td(eta) readings: only the balanced ones reproduce 1/6") {
  const auto m = eta_reading_coefficients(2, 3);
  CHECK(m.at(EtaReading::Ratio) == Rational(1));  // 2*3/6
  CHECK(m.at(EtaReading::Middle) == m.at(EtaReading::Ratio));
  CHECK(m.at(EtaReading::SubBundle) != m.at(EtaReading::Ratio));
  CHECK(m.at(EtaReading::Quotient) != m.at(EtaReading::Ratio));
}

TEST_CASE("singular term accumulation merges and cancels") {
  SingularTerm t;
  t.add(Rational(1, 3), TermMarker::LogNorm, {CurvatureSymbol::L0});
  t.add(Rational(2, 3), TermMarker::LogNorm, {CurvatureSymbol::L0});
  REQUIRE(t.monomials().size() == 1);
  CHECK(t.monomials()[0].coeff == Rational(1));
  t.add(Rational(-1), TermMarker::LogNorm, {CurvatureSymbol::L0});
  CHECK(t.is_zero());
}
