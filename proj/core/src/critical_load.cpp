#include "koiter/critical_load.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "koiter/errors.hpp"
#include "koiter/parallel.hpp"

namespace koiter {

namespace {

// Affine function t a_theta + z a_z + c of the two amplitudes.
struct Affine {
  double t;
  double z;
  double c;
};

// Quadratic 1/2 x^T P x + g^T x + c in x = (a_theta, a_z).
struct Quadratic {
  double ptt = 0.0;
  double ptz = 0.0;
  double pzz = 0.0;
  double gt = 0.0;
  double gz = 0.0;
  double c = 0.0;

  // Adds weight * A * B.
  void add_product(double weight, const Affine& a, const Affine& b) {
    ptt += weight * 2.0 * a.t * b.t;
    ptz += weight * (a.t * b.z + a.z * b.t);
    pzz += weight * 2.0 * a.z * b.z;
    gt += weight * (a.c * b.t + b.c * a.t);
    gz += weight * (a.c * b.z + b.c * a.z);
    c += weight * a.c * b.c;
  }
  void add_square(double weight, const Affine& a) { add_product(weight, a, a); }
  void add_constant(double value) { c += value; }
  void add(double weight, const Quadratic& q) {
    ptt += weight * q.ptt;
    ptz += weight * q.ptz;
    pzz += weight * q.pzz;
    gt += weight * q.gt;
    gz += weight * q.gz;
    c += weight * q.c;
  }

  [[nodiscard]] double value(double at, double az) const {
    return 0.5 * (ptt * at * at + 2.0 * ptz * at * az + pzz * az * az) + gt * at + gz * az + c;
  }
  [[nodiscard]] double gradient_norm(double at, double az) const {
    return std::hypot(ptt * at + ptz * az + gt, ptz * at + pzz * az + gz);
  }

  // Exact minimizer; with `axial_only` the theta amplitude is pinned to zero.
  [[nodiscard]] AmplitudeMinimum minimize(bool axial_only) const {
    constexpr double kSingular = 1e-14;
    AmplitudeMinimum out;
    if (axial_only) {
      if (!(pzz > 0.0)) throw Error(ErrorKind::SingularSystem, "amplitude Hessian is not positive definite");
      out.a_z = -gz / pzz;
    } else {
      const double det = ptt * pzz - ptz * ptz;
      if (!(ptt > 0.0) || !(pzz > 0.0) || !(det > kSingular * ptt * pzz)) {
        throw Error(ErrorKind::SingularSystem, "amplitude Hessian is singular or indefinite");
      }
      out.a_theta = (-gt * pzz + gz * ptz) / det;
      out.a_z = (-gz * ptt + gt * ptz) / det;
    }
    out.value = value(out.a_theta, out.a_z);
    return out;
  }
};

struct FormPolynomials {
  Quadratic q0;
  Quadratic q1_simplified;
  Quadratic q1_cross;
  Quadratic q2;
};

FormPolynomials build_forms(double mh, double n, double nu) {
  const double c = 2.0 * nu / (1.0 - nu);  // 2 Lambda / (Lambda + 2)
  FormPolynomials f;
  const Affine membrane{n, mh, 1.0};
  const Affine hoop{n, 0.0, 1.0};
  const Affine axial{0.0, mh, 0.0};
  const Affine shear{mh, n, 0.0};
  f.q0.add_square(c, membrane);
  f.q0.add_square(2.0, hoop);
  f.q0.add_square(2.0, axial);
  f.q0.add_square(1.0, shear);

  const Affine bending{n, 0.0, mh * mh + n * n};
  const Affine twist{1.0, 0.0, n};
  f.q1_simplified.add_square(c, bending);
  f.q1_simplified.add_square(2.0 * n * n + 4.0 * mh * mh, twist);
  f.q1_simplified.add_constant(2.0 * mh * mh * mh * mh);
  f.q1_cross.add_product(2.0 * mh, twist, shear);

  f.q2.add_square(mh * mh, twist);
  return f;
}

double scale_factor(double mh, double nu) { return 1.0 / (2.0 * (1.0 + nu) * mh * mh); }

Quadratic tilde_objective(const CriticalLoadProblem& problem, double mh, int n) {
  const double nu = problem.elasticity().poisson_ratio();
  const auto f = build_forms(mh, n, nu);
  Quadratic q;
  q.add(1.0, f.q0);
  q.add(problem.thickness_moment(), f.q1_simplified);
  Quadratic scaled;
  scaled.add(scale_factor(mh, nu), q);
  return scaled;
}

Quadratic full_objective(const CriticalLoadProblem& problem, double mh, int n) {
  const double nu = problem.elasticity().poisson_ratio();
  const double h = problem.geometry().thickness();
  const auto f = build_forms(mh, n, nu);
  Quadratic q;
  q.add(1.0, f.q0);
  q.add(problem.thickness_moment(), f.q1_simplified);
  q.add(problem.thickness_moment(), f.q1_cross);
  q.add(h * h * h * h / 80.0, f.q2);
  Quadratic scaled;
  scaled.add(scale_factor(mh, nu), q);
  return scaled;
}

SweepWindow default_window(const ShellGeometry& geom, const IsotropicElasticity& elastic, double margin) {
  const double radius = 1.0 / std::sqrt(2.0 * lambda_star(geom.thickness(), elastic.poisson_ratio()));
  SweepWindow w;
  w.max_m = std::max(2, static_cast<int>(std::ceil(margin * 2.0 * radius * geom.length() / std::numbers::pi)));
  w.max_n = std::max(1, static_cast<int>(std::ceil(margin * radius)));
  return w;
}

}  // namespace

QuadraticForms q_forms(double m_hat, int n, double a_theta, double a_z, const IsotropicElasticity& elastic) {
  const auto f = build_forms(m_hat, n, elastic.poisson_ratio());
  QuadraticForms out;
  out.q0 = f.q0.value(a_theta, a_z);
  out.q1_simplified = f.q1_simplified.value(a_theta, a_z);
  out.q1 = out.q1_simplified + f.q1_cross.value(a_theta, a_z);
  out.q2 = f.q2.value(a_theta, a_z);
  return out;
}

QuadraticForms q_forms(const WaveNumbers& wn, double a_theta, double a_z, const IsotropicElasticity& elastic) {
  return q_forms(wn.m_hat(), wn.n(), a_theta, a_z, elastic);
}

CriticalLoadProblem::CriticalLoadProblem(ShellGeometry geom, IsotropicElasticity elastic, double margin)
    : geom_(geom), elastic_(elastic), margin_(margin) {
  require(std::isfinite(margin) && margin >= 1.0, "window margin factor must be >= 1");
  window_ = default_window(geom_, elastic_, margin_);
}

CriticalLoadProblem::CriticalLoadProblem(ShellGeometry geom, IsotropicElasticity elastic, SweepWindow window)
    : geom_(geom), elastic_(elastic), margin_(0.0), window_(window) {
  require(window.max_m >= 1 && window.max_n >= 0, "sweep window must contain at least one mode");
}

double CriticalLoadProblem::koiter_radius() const { return 1.0 / std::sqrt(2.0 * lambda_star(*this)); }

AmplitudeMinimum lambda3_tilde(const CriticalLoadProblem& problem, const WaveNumbers& wn) {
  return tilde_objective(problem, wn.m_hat(), wn.n()).minimize(wn.n() == 0);
}

AmplitudeMinimum lambda3_full(const CriticalLoadProblem& problem, const WaveNumbers& wn) {
  return full_objective(problem, wn.m_hat(), wn.n()).minimize(wn.n() == 0);
}

double lambda3_objective(const CriticalLoadProblem& problem, const WaveNumbers& wn, double a_theta, double a_z) {
  return full_objective(problem, wn.m_hat(), wn.n()).value(wn.n() == 0 ? 0.0 : a_theta, a_z);
}

double lambda3_gradient_norm(const CriticalLoadProblem& problem, const WaveNumbers& wn, double a_theta, double a_z) {
  const auto q = full_objective(problem, wn.m_hat(), wn.n());
  if (wn.n() == 0) return std::abs(q.pzz * a_z + q.gz);
  return q.gradient_norm(a_theta, a_z);
}

AmplitudeMinimum minimize_q0_axial(double m_hat, int n, double a_theta, const IsotropicElasticity& elastic) {
  require(m_hat > 0.0 && n >= 0, "wave numbers must satisfy m_hat > 0, n >= 0");
  const auto q0 = build_forms(m_hat, n, elastic.poisson_ratio()).q0;
  // Restrict to the a_z line at fixed a_theta: 1/2 pzz a_z^2 + (ptz a_theta + gz) a_z + const.
  if (!(q0.pzz > 0.0)) throw Error(ErrorKind::SingularSystem, "Q0 is not strictly convex in a_z");
  AmplitudeMinimum out;
  out.a_theta = a_theta;
  out.a_z = -(q0.ptz * a_theta + q0.gz) / q0.pzz;
  out.value = q0.value(a_theta, out.a_z);
  return out;
}

double axial_amplitude_formula(double m_hat, int n, double a_theta, double poisson_ratio) {
  const double nu = poisson_ratio;
  return -m_hat * (2.0 * nu + (nu + 1.0) * n * a_theta) / (2.0 * m_hat * m_hat + (1.0 - nu) * n * n);
}

std::vector<ModeValue> sweep_table(const CriticalLoadProblem& problem, unsigned jobs) {
  const auto& w = problem.window();
  const std::size_t per_n = static_cast<std::size_t>(w.max_m);
  std::vector<ModeValue> table(per_n * static_cast<std::size_t>(w.max_n + 1));
  parallel_for(table.size(), jobs, [&](std::size_t i) {
    const int n = static_cast<int>(i / per_n);
    const int m = static_cast<int>(i % per_n) + 1;
    table[i] = {m, n, lambda3_tilde(problem, problem.wave_numbers(m, n))};
  });
  return table;
}

BucklingResult sweep(const CriticalLoadProblem& problem, unsigned jobs) {
  const auto table = sweep_table(problem, jobs);
  // The table is ordered by n, then m, so a strict comparison implements the tie-break.
  const ModeValue* best = &table.front();
  for (const auto& entry : table) {
    if (entry.tilde.value < best->tilde.value) best = &entry;
  }
  const auto& w = problem.window();
  if (best->m == w.max_m || best->n == w.max_n) {
    throw Error(ErrorKind::WindowTooSmall, "sweep minimizer (m=" + std::to_string(best->m) +
                                               ", n=" + std::to_string(best->n) +
                                               ") touches the window edge; increase the margin factor");
  }
  const auto wn = problem.wave_numbers(best->m, best->n);
  BucklingResult result;
  result.lambda = best->tilde.value;
  result.lambda_full = lambda3_full(problem, wn).value;
  result.lambda_star = lambda_star(problem);
  result.m = best->m;
  result.n = best->n;
  result.m_hat = wn.m_hat();
  result.a_theta = best->tilde.a_theta;
  result.a_z = best->tilde.a_z;
  result.koiter_residual = koiter_residual(result.lambda, result.m_hat, result.n);
  return result;
}

double lambda_star(double thickness, double poisson_ratio) {
  return thickness / std::sqrt(3.0 * (1.0 - poisson_ratio * poisson_ratio));
}

double lambda_star(const CriticalLoadProblem& problem) {
  return lambda_star(problem.geometry().thickness(), problem.elasticity().poisson_ratio());
}

double lambda3_star(const CriticalLoadProblem& problem, double m_hat, double n) {
  const double nu = problem.elasticity().poisson_ratio();
  const double k2 = m_hat * m_hat + n * n;
  return m_hat * m_hat / (k2 * k2) + problem.thickness_moment() * k2 * k2 / ((1.0 - nu * nu) * m_hat * m_hat);
}

double koiter_residual(double lambda, double m_hat, double n) {
  return std::abs(m_hat / (m_hat * m_hat + n * n) - std::sqrt(0.5 * lambda));
}

double circle_distance(const CriticalLoadProblem& problem, double m_hat, double n) {
  const double radius = problem.koiter_radius();
  return std::hypot(m_hat - radius, n) - radius;
}

std::vector<CirclePoint> koiter_circle(const CriticalLoadProblem& problem, double relative_tolerance) {
  require(relative_tolerance >= 0.0, "circle tolerance must be nonnegative");
  const double radius = problem.koiter_radius();
  const double L = problem.geometry().length();
  const int max_m = static_cast<int>(std::ceil(2.0 * radius * L / std::numbers::pi)) + 1;
  const int max_n = static_cast<int>(std::ceil(radius)) + 1;
  std::vector<CirclePoint> points;
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 1; m <= max_m; ++m) {
      const auto wn = problem.wave_numbers(m, n);
      const double residual = std::abs(circle_distance(problem, wn.m_hat(), n)) / radius;
      if (residual <= relative_tolerance) points.push_back({wn, residual});
    }
  }
  if (points.empty()) throw Error(ErrorKind::EmptySet, "no integer wave numbers within the circle tolerance");
  std::stable_sort(points.begin(), points.end(),
                   [](const CirclePoint& a, const CirclePoint& b) { return a.residual < b.residual; });
  return points;
}

}  // namespace koiter
