#pragma once

#include <vector>

#include "koiter/material.hpp"
#include "koiter/shell.hpp"

namespace koiter {

/// \brief The four quadratic forms in (a_theta, a_z) of a linearized mode with f_r(1) = 1.
struct QuadraticForms {
  double q0 = 0.0;
  double q1 = 0.0;
  double q1_simplified = 0.0;
  double q2 = 0.0;
};

/// \brief Evaluates the forms with the continuous axial wave number m_hat.
QuadraticForms q_forms(const WaveNumbers& wn, double a_theta, double a_z, const IsotropicElasticity& elastic);
QuadraticForms q_forms(double m_hat, int n, double a_theta, double a_z, const IsotropicElasticity& elastic);

/// \brief Inclusive upper bounds of the integer sweep window (m in [1, max_m], n in [0, max_n]).
struct SweepWindow {
  int max_m = 1;
  int max_n = 0;
};

/**
 * \brief Shell, material and integer window for the finite-dimensional buckling problem.
 *
 * The default window covers the Koiter circle (diameter 2R in m_hat, height R in n,
 * R = 1/sqrt(2 lambda*)) times a margin factor.
 */
class CriticalLoadProblem {
 public:
  CriticalLoadProblem(ShellGeometry geom, IsotropicElasticity elastic, double margin = 3.0);
  CriticalLoadProblem(ShellGeometry geom, IsotropicElasticity elastic, SweepWindow window);

  [[nodiscard]] const ShellGeometry& geometry() const { return geom_; }
  [[nodiscard]] const IsotropicElasticity& elasticity() const { return elastic_; }
  [[nodiscard]] double margin() const { return margin_; }
  [[nodiscard]] const SweepWindow& window() const { return window_; }
  /// \brief H = h^2 / 12.
  [[nodiscard]] double thickness_moment() const { return geom_.thickness() * geom_.thickness() / 12.0; }
  /// \brief Radius R = 1/sqrt(2 lambda*) of the Koiter circle in the (m_hat, n) plane.
  [[nodiscard]] double koiter_radius() const;
  [[nodiscard]] WaveNumbers wave_numbers(int m, int n) const { return {m, n, geom_.length()}; }

 private:
  ShellGeometry geom_;
  IsotropicElasticity elastic_;
  double margin_;
  SweepWindow window_;
};

/// \brief Minimum over (a_theta, a_z) of a per-mode objective, with its argmin.
struct AmplitudeMinimum {
  double value = 0.0;
  double a_theta = 0.0;
  double a_z = 0.0;
};

/**
 * \brief min over (a_theta, a_z) of (Q0 + H Qtilde1) / (2 (1+nu) m_hat^2), solved exactly.
 *
 * For n = 0 the theta amplitude is absent and the minimization runs over a_z only.
 * \throws Error SingularSystem if the Hessian is (numerically) singular.
 */
AmplitudeMinimum lambda3_tilde(const CriticalLoadProblem& problem, const WaveNumbers& wn);

/// \brief As lambda3_tilde for (Q0 + H Q1 + h^4/80 Q2) / (2 (1+nu) m_hat^2).
AmplitudeMinimum lambda3_full(const CriticalLoadProblem& problem, const WaveNumbers& wn);

/// \brief Value of the lambda3_full objective at given amplitudes.
double lambda3_objective(const CriticalLoadProblem& problem, const WaveNumbers& wn, double a_theta, double a_z);

/// \brief Gradient norm of the lambda3_full objective at given amplitudes.
double lambda3_gradient_norm(const CriticalLoadProblem& problem, const WaveNumbers& wn, double a_theta, double a_z);

/// \brief Exact argmin in a_z of Q0 alone at frozen a_theta (value holds the minimum of Q0).
AmplitudeMinimum minimize_q0_axial(double m_hat, int n, double a_theta, const IsotropicElasticity& elastic);

/// \brief Closed form a_z = -m_hat (2 nu + (1+nu) n a_theta) / (2 m_hat^2 + (1-nu) n^2).
double axial_amplitude_formula(double m_hat, int n, double a_theta, double poisson_ratio);

/// \brief Outcome of the integer sweep.
struct BucklingResult {
  double lambda = 0.0;       ///< lambda3_tilde at the winner, the critical strain
  double lambda_full = 0.0;  ///< lambda3_full at the winner
  double lambda_star = 0.0;  ///< classical value h / sqrt(3 (1 - nu^2))
  int m = 0;
  int n = 0;
  double m_hat = 0.0;
  double a_theta = 0.0;
  double a_z = 0.0;
  double koiter_residual = 0.0;  ///< |m_hat/(m_hat^2+n^2) - sqrt(lambda/2)|
};

/// \brief lambda3_tilde of one window entry.
struct ModeValue {
  int m = 0;
  int n = 0;
  AmplitudeMinimum tilde;
};

/// \brief lambda3_tilde on every window entry, ordered by n then m.
std::vector<ModeValue> sweep_table(const CriticalLoadProblem& problem, unsigned jobs = 0);

/**
 * \brief Exhaustive minimization of lambda3_tilde over the window.
 *
 * Ties go to the smallest n, then the smallest m.
 * \throws Error WindowTooSmall if the minimizer sits on the window's outer edge.
 */
BucklingResult sweep(const CriticalLoadProblem& problem, unsigned jobs = 0);

/// \brief Classical critical strain h / sqrt(3 (1 - nu^2)).
double lambda_star(const CriticalLoadProblem& problem);
double lambda_star(double thickness, double poisson_ratio);

/// \brief Continuous reduced load m_hat^2/(m_hat^2+n^2)^2 + H (m_hat^2+n^2)^2 / ((1-nu^2) m_hat^2).
double lambda3_star(const CriticalLoadProblem& problem, double m_hat, double n);

/// \brief |m_hat/(m_hat^2+n^2) - sqrt(lambda/2)|.
double koiter_residual(double lambda, double m_hat, double n);

/// \brief Signed distance of (m_hat, n) from the Koiter circle (m_hat - R)^2 + n^2 = R^2.
double circle_distance(const CriticalLoadProblem& problem, double m_hat, double n);

/// \brief Integer pair near the Koiter circle with its relative distance |distance| / R.
struct CirclePoint {
  WaveNumbers wn;
  double residual = 0.0;
};

/**
 * \brief Integer pairs within relative distance `relative_tolerance` of the Koiter circle,
 * sorted by residual (ties: smaller n, then smaller m).
 * \throws Error EmptySet if no pair qualifies.
 */
std::vector<CirclePoint> koiter_circle(const CriticalLoadProblem& problem, double relative_tolerance);

}  // namespace koiter
