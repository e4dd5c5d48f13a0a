#include "koiter/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "koiter/critical_load.hpp"
#include "koiter/errors.hpp"
#include "koiter/oracle.hpp"
#include "koiter/parallel.hpp"

namespace koiter {

namespace {

struct Resolved {
  int m;
  int n;
  double target;
  double a_theta;
};

Resolved resolve(const BucklingModeSpec& spec) {
  require(std::isfinite(spec.alpha) && spec.alpha > 0.0 && spec.alpha <= 1.0, "alpha must lie in (0, 1]");
  Resolved out{};
  const double star = lambda_star(spec.geom.thickness(), spec.elastic.poisson_ratio());
  out.target = std::pow(std::sqrt(2.0 / star), spec.alpha);
  out.m = mode_axial_index(spec.geom, spec.elastic, spec.alpha);
  out.n = mode_circumferential_index(spec.geom, spec.elastic, out.m);

  const CriticalLoadProblem problem(spec.geom, spec.elastic, spec.margin);
  const auto& w = problem.window();
  if (out.m + 2 > w.max_m || out.n > w.max_n) {
    throw Error(ErrorKind::WindowTooSmall, "mode pair (" + std::to_string(out.m) + ", " + std::to_string(out.m + 2) +
                                               ") x n=" + std::to_string(out.n) + " leaves the sweep window");
  }
  out.a_theta = mode_angular_amplitude(WaveNumbers(out.m, out.n, spec.geom.length()).m_hat(), out.n,
                                       spec.elastic.poisson_ratio());
  return out;
}

LinearizedMode harmonic(const BucklingModeSpec& spec, int m, int n, double a_theta, double sign) {
  const WaveNumbers wn(m, n, spec.geom.length());
  const double nu = spec.elastic.poisson_ratio();
  const double a_z = axial_amplitude_formula(wn.m_hat(), n, a_theta, nu);
  // F_r = 1 - nu/(1-nu) ((r-1) p0 + (r-1)^2/2 p1) is the optimal profile for these amplitudes.
  const auto base = LinearizedMode::with_optimal_profile(wn, a_theta, a_z, spec.elastic);
  return {wn, sign * base.a_theta(), sign * base.a_z(), sign * base.radial()};
}

}  // namespace

double mode_angular_amplitude(double m_hat, int n, double poisson_ratio) {
  const double k2 = m_hat * m_hat + n * n;
  return -n * (n * n + (poisson_ratio + 2.0) * m_hat * m_hat) / (k2 * k2);
}

int mode_axial_index(const ShellGeometry& geom, const IsotropicElasticity& elastic, double alpha) {
  const double star = lambda_star(geom.thickness(), elastic.poisson_ratio());
  const double target = std::pow(std::sqrt(2.0 / star), alpha);
  return std::max(1, static_cast<int>(std::lround(target * geom.length() / std::numbers::pi)));
}

int mode_circumferential_index(const ShellGeometry& geom, const IsotropicElasticity& elastic, int m) {
  const double star = lambda_star(geom.thickness(), elastic.poisson_ratio());
  const double goal = std::sqrt(0.5 * star);
  const double centre = std::numbers::pi * (m + 1) / geom.length();
  const int limit = static_cast<int>(std::ceil(2.0 / std::sqrt(2.0 * star))) + 2;
  int best = 0;
  double best_residual = koiter_residual(star, centre, 0.0);
  for (int n = 1; n <= limit; ++n) {
    const double residual = std::abs(centre / (centre * centre + double(n) * n) - goal);
    if (residual < best_residual) {
      best = n;
      best_residual = residual;
    }
  }
  return best;
}

BucklingMode::BucklingMode(const BucklingModeSpec& spec)
    : spec_(spec),
      harmonics_([&] {
        const Resolved r = resolve(spec);
        m_ = r.m;
        n_ = r.n;
        target_ = r.target;
        a_theta_ = r.a_theta;
        return std::array<LinearizedMode, 2>{harmonic(spec, r.m, r.n, r.a_theta, 1.0),
                                             harmonic(spec, r.m + 2, r.n, r.a_theta, -1.0)};
      }()) {}

std::array<double, 3> evaluate_modes(const std::vector<LinearizedMode>& modes, double r, double theta, double z) {
  std::array<double, 3> phi{};
  const double s = r - 1.0;
  for (const auto& mode : modes) {
    const auto& wn = mode.wave_numbers();
    const double ct = std::cos(wn.n() * theta);
    const double st = std::sin(wn.n() * theta);
    const double cz = std::cos(wn.m_hat() * z);
    const double sz = std::sin(wn.m_hat() * z);
    phi[0] += mode.radial()(s) * ct * cz;
    if (wn.n() > 0) phi[1] += mode.angular()(s) * st * cz;
    phi[2] += mode.axial()(s) * ct * sz;
  }
  return phi;
}

DisplacementField sample_modes(const ShellGeometry& geom, const std::vector<LinearizedMode>& modes,
                               GridResolution resolution, unsigned jobs) {
  require(!modes.empty(), "at least one mode is required");
  require(resolution.radial >= 2, "radial grid needs at least two samples");
  int max_m = 1, max_n = 0;
  for (const auto& mode : modes) {
    max_m = std::max(max_m, mode.wave_numbers().m());
    max_n = std::max(max_n, mode.wave_numbers().n());
  }
  const int theta_intervals = std::max(resolution.theta, 8 * max_n + 16);
  const int axial_intervals = std::max(resolution.axial, 8 * max_m + 16);

  DisplacementField field;
  for (int i = 0; i < resolution.radial; ++i)
    field.r.push_back(geom.inner_radius() + geom.thickness() * i / (resolution.radial - 1));
  for (int j = 0; j <= theta_intervals; ++j) field.theta.push_back(2.0 * std::numbers::pi * j / theta_intervals);
  for (int k = 0; k <= axial_intervals; ++k) field.z.push_back(geom.length() * k / axial_intervals);
  // Exact endpoints keep the periodic and boundary samples free of rounding drift.
  field.theta.back() = 2.0 * std::numbers::pi;
  field.z.back() = geom.length();

  field.phi_r.resize(field.size());
  field.phi_theta.resize(field.size());
  field.phi_z.resize(field.size());
  parallel_for(field.z.size(), jobs, [&](std::size_t k) {
    for (std::size_t j = 0; j < field.theta.size(); ++j) {
      for (std::size_t i = 0; i < field.r.size(); ++i) {
        const auto phi = evaluate_modes(modes, field.r[i], field.theta[j], field.z[k]);
        const std::size_t idx = field.index(i, j, k);
        field.phi_r[idx] = phi[0];
        field.phi_theta[idx] = phi[1];
        field.phi_z[idx] = phi[2];
      }
    }
  });
  return field;
}

DisplacementField synthesize(const BucklingMode& mode, GridResolution resolution, unsigned jobs) {
  const auto& h = mode.harmonics();
  return sample_modes(mode.spec().geom, {h[0], h[1]}, resolution, jobs);
}

BoundaryTraces boundary_traces(const DisplacementField& field) {
  BoundaryTraces out;
  for (std::size_t idx = 0; idx < field.size(); ++idx) {
    out.field_scale = std::max({out.field_scale, std::abs(field.phi_r[idx]), std::abs(field.phi_theta[idx]),
                                std::abs(field.phi_z[idx])});
  }
  const std::size_t last = field.z.size() - 1;
  for (std::size_t k : {std::size_t{0}, last}) {
    for (std::size_t j = 0; j < field.theta.size(); ++j) {
      for (std::size_t i = 0; i < field.r.size(); ++i) {
        const std::size_t idx = field.index(i, j, k);
        out.max_trace = std::max({out.max_trace, std::abs(field.phi_theta[idx]), std::abs(field.phi_z[idx])});
      }
    }
  }
  return out;
}

QuotientBreakdown quotient_ratio(const BucklingMode& mode) {
  const auto& spec = mode.spec();
  QuotientBreakdown out;
  out.lambda_star = lambda_star(spec.geom.thickness(), spec.elastic.poisson_ratio());
  double stiffness = 0.0, denominator = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto forms = evaluate_forms(spec.geom, spec.elastic, mode.harmonics()[i].to_fourier());
    out.stiffness[i] = forms.stiffness;
    out.denominator[i] = forms.radial_shear;
    out.harmonic_ratio[i] = forms.stiffness / forms.radial_shear / out.lambda_star;
    stiffness += forms.stiffness;
    denominator += forms.radial_shear;
  }
  if (!(denominator > 0.0)) throw Error(ErrorKind::ZeroDenominator, "buckling mode has no radial shear");
  out.quotient = stiffness / denominator;
  out.ratio = out.quotient / out.lambda_star;
  return out;
}

QuotientBreakdown quotient_ratio(const BucklingModeSpec& spec) { return quotient_ratio(BucklingMode(spec)); }

}  // namespace koiter
