#include "tcalc/degeneration.hpp"

#include <algorithm>
#include <cmath>

namespace tcalc {

namespace {

using cplx = std::complex<double>;

double sq(double x) { return x * x; }

// 4th-order central stencils.
constexpr double kFdStep = 1e-3;

double deriv1(const std::function<double(double)>& f, double x, double eps = kFdStep) {
  return (f(x - 2 * eps) - 8 * f(x - eps) + 8 * f(x + eps) - f(x + 2 * eps)) / (12 * eps);
}

double deriv2(const std::function<double(double)>& f, double x, double eps = kFdStep) {
  return (-f(x - 2 * eps) + 16 * f(x - eps) - 30 * f(x) + 16 * f(x + eps) - f(x + 2 * eps)) /
         (12 * eps * eps);
}

double laplacian(const std::function<double(cplx)>& f, cplx z, double eps = kFdStep) {
  auto fx = [&](double x) { return f(cplx(x, z.imag())); };
  auto fy = [&](double y) { return f(cplx(z.real(), y)); };
  return deriv2(fx, z.real(), eps) + deriv2(fy, z.imag(), eps);
}

double grad_sq(const std::function<double(cplx)>& f, cplx z, double eps = kFdStep) {
  auto fx = [&](double x) { return f(cplx(x, z.imag())); };
  auto fy = [&](double y) { return f(cplx(z.real(), y)); };
  return sq(deriv1(fx, z.real(), eps)) + sq(deriv1(fy, z.imag(), eps));
}

// Composite Simpson with 2*half panels on [a, b].
double simpson(const std::function<double(double)>& f, double a, double b, int half) {
  const int n = 2 * half;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// int_0^1 K(rho) log(rho) d rho via rho = e^{-s}; the integrands here all
// vanish at rho = 0 fast enough that truncating at s = 36 is far below the
// 1e-6 target.
double log_kernel_integral(const std::function<double(double)>& k, int half_panels) {
  auto g = [&](double s) {
    const double rho = std::exp(-s);
    return -s * rho * k(rho);
  };
  return simpson(g, 0.0, 36.0, half_panels);
}

// The radial reductions. With u = g^2 and L[u] = rho u'' + u' (so that
// Delta u * rho dtheta drho integrates to 2 pi L[u] drho):
//   a = 1/2 ( -I_a[chart0] + I_a[chart1] ),  I_a = int_0^1 log(rho) L[u] drho
//   b = -( I_b[chart0] - I_b[chart1] ),      I_b = int_0^1 log(rho) g'^2 rho drho
double radial_a_chart(const std::function<double(cplx)>& h, int half_panels) {
  auto k = [&](double rho) {
    auto g = [&](double x) { return h(cplx(x, 0.0)); };
    const double gv = g(rho), g1 = deriv1(g, rho), g2 = deriv2(g, rho);
    const double u1 = 2 * gv * g1;
    const double u2 = 2 * (g1 * g1 + gv * g2);
    return rho * u2 + u1;
  };
  return log_kernel_integral(k, half_panels);
}

double radial_b_chart(const std::function<double(cplx)>& h, int half_panels) {
  auto k = [&](double rho) {
    auto g = [&](double x) { return h(cplx(x, 0.0)); };
    return sq(deriv1(g, rho)) * rho;
  };
  return log_kernel_integral(k, half_panels);
}

// Polar tensor grid over the unit disc: int log|z| F(z) dA with the theta
// trapezoid inside (spectrally accurate for these smooth periodic slices).
double disc_log_integral(const std::function<double(cplx)>& f, int n_theta, int half_panels,
                         bool zero_kernel = false) {
  auto ring_slice = [&](double rho) {
    double acc = 0.0;
    for (int i = 0; i < n_theta; ++i) {
      const double th = 2.0 * M_PI * i / n_theta;
      acc += f(cplx(rho * std::cos(th), rho * std::sin(th)));
    }
    return acc * (2.0 * M_PI / n_theta) * rho;
  };
  if (zero_kernel) return 0.0 * ring_slice(0.5);
  return log_kernel_integral(ring_slice, half_panels);
}

int theta_points(int grid) { return std::clamp(grid / 8, 64, 1024); }

double two_chart_a(const HPreset& p, int grid, bool zero_kernel) {
  const int nt = theta_points(grid);
  auto f0 = [&](cplx z) {
    auto hsq = [&](cplx w) { return sq(p.chart0(w)); };
    return laplacian(hsq, z);
  };
  auto f1 = [&](cplx z) {
    auto hsq = [&](cplx w) { return sq(p.chart1(w)); };
    return laplacian(hsq, z);
  };
  const double i0 = disc_log_integral(f0, nt, grid, zero_kernel);
  const double i1 = disc_log_integral(f1, nt, grid, zero_kernel);
  return (-i0 + i1) / (4.0 * M_PI);
}

double two_chart_b(const HPreset& p, int grid, bool zero_kernel) {
  const int nt = theta_points(grid);
  auto f0 = [&](cplx z) { return grad_sq(p.chart0, z); };
  auto f1 = [&](cplx z) { return grad_sq(p.chart1, z); };
  const double i0 = disc_log_integral(f0, nt, grid, zero_kernel);
  const double i1 = disc_log_integral(f1, nt, grid, zero_kernel);
  return -(i0 - i1) / (2.0 * M_PI);
}

double refine(const std::function<double(int)>& eval, int grid, double tol) {
  const double v1 = eval(grid);
  const double v2 = eval(2 * grid);
  if (std::abs(v2 - v1) > tol)
    throw ConvergenceError("quadrature did not stabilise under grid refinement");
  return v2;
}

constexpr double kQuadratureTol = 1e-6;

}  // namespace

const std::vector<HPreset>& builtin_presets() {
  static const std::vector<HPreset> presets = [] {
    std::vector<HPreset> v;
    v.push_back({"rational1", true,
                 [](cplx t) { return std::norm(t) / (1.0 + std::norm(t)); },
                 [](cplx u) { return 1.0 / (1.0 + std::norm(u)); }});
    v.push_back({"rational2", true,
                 [](cplx t) { return sq(std::norm(t) / (1.0 + std::norm(t))); },
                 [](cplx u) { return sq(1.0 / (1.0 + std::norm(u))); }});
    v.push_back({"quartic", true,
                 [](cplx t) { return sq(std::norm(t)) / (1.0 + sq(std::norm(t))); },
                 [](cplx u) { return 1.0 / (1.0 + sq(std::norm(u))); }});
    // Non-radial: h = (|t|^2 + Re(t)/2) / (1 + |t|^2 + Re(t)/2).
    v.push_back({"tilted", false,
                 [](cplx t) {
                   const double w = std::norm(t) + 0.5 * t.real();
                   return w / (1.0 + w);
                 },
                 [](cplx u) {
                   const double w = 1.0 + 0.5 * u.real();
                   return w / (std::norm(u) + w);
                 }});
    return v;
  }();
  return presets;
}

const HPreset& preset_by_name(const std::string& name) {
  for (const HPreset& p : builtin_presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

bool check_preset(const HPreset& p, double tol) {
  if (std::abs(p.chart0(cplx(0, 0))) > 0.0) return false;
  if (std::abs(p.chart1(cplx(0, 0)) - 1.0) > 0.0) return false;
  // chart agreement on the unit circle
  for (int i = 0; i < 16; ++i) {
    const double th = 2.0 * M_PI * i / 16;
    const cplx t(std::cos(th), std::sin(th));
    if (std::abs(p.chart0(t) - p.chart1(1.0 / t)) > tol) return false;
  }
  // smoothness across infinity: Laplacian in the u-chart stays bounded
  for (double r : {0.0, 1e-2, 1e-1}) {
    if (std::abs(laplacian(p.chart1, cplx(r, r))) > 1e3) return false;
  }
  return true;
}

double quadrature_a_single(const HPreset& p, int grid, bool force_two_chart) {
  if (grid < 64) throw std::invalid_argument("quadrature: grid too small");
  if (p.radial && !force_two_chart) {
    const double i0 = radial_a_chart(p.chart0, grid);
    const double i1 = radial_a_chart(p.chart1, grid);
    return 0.5 * (-i0 + i1);
  }
  return two_chart_a(p, grid, false);
}

double quadrature_b_single(const HPreset& p, int grid, bool force_two_chart) {
  if (grid < 64) throw std::invalid_argument("quadrature: grid too small");
  if (p.radial && !force_two_chart) {
    const double i0 = radial_b_chart(p.chart0, grid);
    const double i1 = radial_b_chart(p.chart1, grid);
    return -(i0 - i1);
  }
  return two_chart_b(p, grid, false);
}

double quadrature_a(const HPreset& p, int grid) {
  return refine([&](int g) { return quadrature_a_single(p, g); }, grid, kQuadratureTol);
}

double quadrature_b(const HPreset& p, int grid) {
  return refine([&](int g) { return quadrature_b_single(p, g); }, grid, kQuadratureTol);
}

double quadrature_a_zero_kernel(const HPreset& p, int grid) { return two_chart_a(p, grid, true); }
double quadrature_b_zero_kernel(const HPreset& p, int grid) { return two_chart_b(p, grid, true); }

// ---- symbolic engine ----

void SingularTerm::add(Rational coeff, TermMarker marker, std::vector<CurvatureSymbol> symbols) {
  if (coeff.is_zero()) return;
  std::sort(symbols.begin(), symbols.end());
  for (SingularMonomial& m : monos_) {
    if (m.marker == marker && m.symbols == symbols) {
      m.coeff += coeff;
      if (m.coeff.is_zero()) {
        m = monos_.back();
        monos_.pop_back();
      }
      return;
    }
  }
  monos_.push_back({std::move(coeff), marker, std::move(symbols)});
}

namespace {

// Degree <= 1 slice of an even characteristic form: c0 + sum c1[s] * s.
struct EvenSlice {
  Rational c0;
  std::map<CurvatureSymbol, Rational> c1;

  EvenSlice mul(const EvenSlice& o) const {
    EvenSlice r;
    r.c0 = c0 * o.c0;
    for (const auto& [s, v] : c1) r.c1[s] += v * o.c0;
    for (const auto& [s, v] : o.c1) r.c1[s] += c0 * v;
    // degree-2 products are dropped: they cannot reach the (3,2) slice
    return r;
  }
};

EvenSlice eta_slice(EtaReading reading) {
  EvenSlice e;
  e.c0 = Rational(1);
  switch (reading) {
    case EtaReading::Ratio:
      // Td(U) Td(L_0) Td(T_X)^{-1}: degree-1 part (cU + cL0 - cTX)/2
      e.c1[CurvatureSymbol::U] = Rational(1, 2);
      e.c1[CurvatureSymbol::L0] = Rational(1, 2);
      e.c1[CurvatureSymbol::TangentX] = Rational(-1, 2);
      break;
    case EtaReading::SubBundle:
      e.c1[CurvatureSymbol::U] = Rational(1, 2);
      break;
    case EtaReading::Quotient:
      e.c1[CurvatureSymbol::L0] = Rational(1, 2);
      break;
    case EtaReading::Middle:
      e.c1[CurvatureSymbol::TangentX] = Rational(1, 2);
      break;
  }
  return e;
}

}  // namespace

SingularTerm tdm_gamma_terms(int rank, EtaReading reading) {
  if (rank < 0) throw std::invalid_argument("tdm_gamma_terms: negative rank");
  // ch(F) Td(f): rank + (rank/2)(cTX - cTS) + [c1(F), a pullback from X,
  // annihilated by the same rule as cTX and therefore not tracked].
  EvenSlice ch_td;
  ch_td.c0 = Rational(rank);
  ch_td.c1[CurvatureSymbol::TangentX] = Rational(rank, 2);
  ch_td.c1[CurvatureSymbol::TangentS] = Rational(-rank, 2);

  EvenSlice tdinv_l0;
  tdinv_l0.c0 = Rational(1);
  tdinv_l0.c1[CurvatureSymbol::L0] = Rational(-1, 2);

  const EvenSlice prod = ch_td.mul(eta_slice(reading)).mul(tdinv_l0);

  SingularTerm out;
  // -1/2 log|1|_1 against the degree-1 part of the even product
  for (const auto& [s, v] : prod.c1) out.add(Rational(-1, 2) * v, TermMarker::LogNorm, {s});
  // bracket degree-1 terms against the degree-0 part
  out.add(Rational(-1, 6) * prod.c0, TermMarker::LogNorm, {CurvatureSymbol::L0});
  out.add(Rational(-1, 12) * prod.c0, TermMarker::LogNorm, {CurvatureSymbol::OE});
  // exact term, coefficient (b/3) * rank with the b factor implicit
  out.add(Rational(1, 3) * prod.c0, TermMarker::DdbarTerm, {});
  return out;
}

Rational logw_coefficient_of(const SingularTerm& t, int n_p) {
  if (n_p < 1) throw std::invalid_argument("logw_coefficient: n_p >= 1");
  Rational acc(0);
  for (const SingularMonomial& m : t.monomials()) {
    switch (m.marker) {
      case TermMarker::DdbarTerm:
        // fiber integral of an exact form vanishes, independently of b
        continue;
      case TermMarker::LogNorm: {
        if (m.symbols.size() != 1)
          throw std::logic_error("logw_coefficient: unreduced log-norm monomial");
        switch (m.symbols[0]) {
          case CurvatureSymbol::TangentX:
          case CurvatureSymbol::TangentS:
            break;  // pullbacks integrate to O(1)
          case CurvatureSymbol::L0:
            acc += m.coeff * Rational(n_p);
            break;
          case CurvatureSymbol::U:
          case CurvatureSymbol::OE:
            acc += m.coeff * Rational(-n_p);
            break;
        }
        break;
      }
      case TermMarker::Plain:
        throw std::logic_error("logw_coefficient: unreduced plain monomial");
    }
  }
  return acc;
}

Rational logw_coefficient(int rank, int n_p, EtaReading reading) {
  return logw_coefficient_of(tdm_gamma_terms(rank, reading), n_p);
}

std::map<EtaReading, Rational> eta_reading_coefficients(int rank, int n_p) {
  std::map<EtaReading, Rational> m;
  for (EtaReading r : {EtaReading::Ratio, EtaReading::SubBundle, EtaReading::Quotient,
                       EtaReading::Middle})
    m.emplace(r, logw_coefficient(rank, n_p, r));
  return m;
}

Rational torsion_singularity_coefficient(int rank, int n_p) {
  return -logw_coefficient(rank, n_p);
}

const char* eta_reading_name(EtaReading r) {
  switch (r) {
    case EtaReading::Ratio: return "ratio";
    case EtaReading::SubBundle: return "subbundle";
    case EtaReading::Quotient: return "quotient";
    case EtaReading::Middle: return "middle";
  }
  return "?";
}

}  // namespace tcalc
