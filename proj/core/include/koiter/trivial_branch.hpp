#pragma once

#include <functional>

#include "koiter/material.hpp"

namespace koiter {

/**
 * \brief Hyperelastic energy W(F) = What(F^T F) probed on diagonal Cauchy-Green tensors.
 *
 * Only the (r,r) component of What_C(diag(c1, c1, c3)) is needed to find the
 * homogeneous trivial branch.
 */
class HyperelasticModel {
 public:
  virtual ~HyperelasticModel() = default;
  /// \brief (r,r) component of What_C at C = diag(c_radial, c_radial, c_axial).
  [[nodiscard]] virtual double radial_stress(double c_radial, double c_axial) const = 0;
  /// \brief Stress scale used to make the residual tolerance dimensionless.
  [[nodiscard]] virtual double stress_scale() const { return 1.0; }
};

/// \brief St. Venant-Kirchhoff energy What(C) = lambda/8 tr(C-I)^2 + mu/4 |C-I|^2.
class StVenantKirchhoff final : public HyperelasticModel {
 public:
  explicit StVenantKirchhoff(const IsotropicElasticity& elastic) : elastic_(elastic) {}

  [[nodiscard]] double radial_stress(double c_radial, double c_axial) const override;
  [[nodiscard]] double stress_scale() const override { return elastic_.youngs_modulus(); }
  [[nodiscard]] const IsotropicElasticity& elasticity() const { return elastic_; }

 private:
  IsotropicElasticity elastic_;
};

/// \brief Adapter for a user-supplied radial stress function.
class ResidualModel final : public HyperelasticModel {
 public:
  using Function = std::function<double(double c_radial, double c_axial)>;
  explicit ResidualModel(Function radial_stress, double stress_scale = 1.0);

  [[nodiscard]] double radial_stress(double c_radial, double c_axial) const override { return f_(c_radial, c_axial); }
  [[nodiscard]] double stress_scale() const override { return scale_; }

 private:
  Function f_;
  double scale_;
};

/// \brief Point (lambda, a) of the trivial branch y = ((1+a) r, theta, (1-lambda) z).
struct TrivialBranchState {
  double lambda = 0.0;
  double a = 0.0;
};

/// \brief Search interval for the radial stretch parameter a.
struct StretchBracket {
  double lower = -0.5;
  double upper = 0.5;
};

/**
 * \brief Radial stretch a(lambda) that makes the homogeneous state traction-free on r = const.
 *
 * Solves What_C((1+a)^2 (e_r e_r + e_t e_t) + (1-lambda)^2 e_z e_z)_rr = 0 with a
 * safeguarded Newton/bisection iteration until |residual| <= 1e-12 * stress_scale.
 *
 * \throws Error NoRoot if the residual does not change sign over the bracket;
 *         NonConvergence after 200 iterations; InvalidArgument if the model is prestressed.
 */
double solve_radial_stretch(const HyperelasticModel& model, double lambda, StretchBracket bracket = {});

/// \brief a'(0) by central difference of solve_radial_stretch with step 1e-6.
double linearized_displacement_slope(const HyperelasticModel& model);

/// \brief Linear elastic stress of the trivial branch, -E e_z (x) e_z, independent of h.
SymStrain trivial_stress(const IsotropicElasticity& elastic);

/// \brief Strain e(u) of the linearized trivial displacement u = nu r e_r - z e_z.
SymStrain trivial_strain(const IsotropicElasticity& elastic);

}  // namespace koiter
