#include "koiter/trivial_branch.hpp"

#include <cmath>
#include <utility>

#include "koiter/errors.hpp"

namespace koiter {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kResidualTolerance = 1e-12;
constexpr double kSlopeStep = 1e-6;

double residual(const HyperelasticModel& model, double lambda, double a) {
  const double stretch = 1.0 + a;
  const double axial = 1.0 - lambda;
  return model.radial_stress(stretch * stretch, axial * axial);
}

double residual_slope(const HyperelasticModel& model, double lambda, double a) {
  const double step = 1e-7 * (1.0 + std::abs(a));
  return (residual(model, lambda, a + step) - residual(model, lambda, a - step)) / (2.0 * step);
}

// A converged root is refined by a few Newton steps so that the returned
// stretch is accurate well below the acceptance tolerance.
double polish(const HyperelasticModel& model, double lambda, double a) {
  double best = a;
  double best_f = std::abs(residual(model, lambda, a));
  for (int it = 0; it < 4 && best_f > 0.0; ++it) {
    const double slope = residual_slope(model, lambda, best);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double next = best - residual(model, lambda, best) / slope;
    const double next_f = std::abs(residual(model, lambda, next));
    if (!(next_f < best_f)) break;
    best = next;
    best_f = next_f;
  }
  return best;
}

}  // namespace

double StVenantKirchhoff::radial_stress(double c_radial, double c_axial) const {
  // What_C = lambda/4 tr(C-I) I + mu/2 (C-I); on diagonal C its rr entry is:
  const double trace = 2.0 * (c_radial - 1.0) + (c_axial - 1.0);
  return 0.25 * elastic_.lame_lambda() * trace + 0.5 * elastic_.shear_modulus() * (c_radial - 1.0);
}

ResidualModel::ResidualModel(Function radial_stress, double stress_scale)
    : f_(std::move(radial_stress)), scale_(stress_scale) {
  require(static_cast<bool>(f_), "residual function must be callable");
  require(std::isfinite(scale_) && scale_ > 0.0, "stress scale must be positive");
}

double solve_radial_stretch(const HyperelasticModel& model, double lambda, StretchBracket bracket) {
  require(std::isfinite(lambda), "lambda must be finite");
  require(bracket.lower < bracket.upper && bracket.lower > -1.0, "bracket must satisfy -1 < lower < upper");
  const double tol = kResidualTolerance * model.stress_scale();
  require(std::abs(residual(model, 0.0, 0.0)) <= tol, "model is prestressed: What_C(I)_rr != 0");

  double lo = bracket.lower;
  double hi = bracket.upper;
  double f_lo = residual(model, lambda, lo);
  double f_hi = residual(model, lambda, hi);
  if (std::abs(f_lo) <= tol) return polish(model, lambda, lo);
  if (std::abs(f_hi) <= tol) return polish(model, lambda, hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw Error(ErrorKind::NoRoot, "radial stress does not change sign on the bracket");
  }

  // Start near the linear prediction a = 0 and keep the root bracketed.
  double a = (lo < 0.0 && hi > 0.0) ? 0.0 : 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = residual(model, lambda, a);
    if (std::abs(f) <= tol) return polish(model, lambda, a);
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = a;
      f_lo = f;
    } else {
      hi = a;
    }
    // Newton step with a central-difference slope; fall back to bisection.
    const double slope = residual_slope(model, lambda, a);
    double next = (slope != 0.0 && std::isfinite(slope)) ? a - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == a) break;
    a = next;
  }
  throw Error(ErrorKind::NonConvergence, "radial stretch iteration did not reach the residual tolerance within 200 steps");
}

double linearized_displacement_slope(const HyperelasticModel& model) {
  const double plus = solve_radial_stretch(model, kSlopeStep);
  const double minus = solve_radial_stretch(model, -kSlopeStep);
  return (plus - minus) / (2.0 * kSlopeStep);
}

SymStrain trivial_stress(const IsotropicElasticity& elastic) {
  return SymStrain::diagonal(0.0, 0.0, -elastic.youngs_modulus());
}

SymStrain trivial_strain(const IsotropicElasticity& elastic) {
  const double nu = elastic.poisson_ratio();
  return SymStrain::diagonal(nu, nu, -1.0);
}

}  // namespace koiter
