#pragma once

#include <array>

#include "koiter/shell.hpp"

namespace koiter {

/**
 * \brief C-infinity bump b(x) = exp(c - c / (1 - x^2)) on (-1, 1), zero outside, b(0) = 1.
 */
class SmoothBump {
 public:
  static constexpr int kMaxOrder = 4;

  explicit SmoothBump(double sharpness = 1.0);

  /// \brief b, b', ..., b^(kMaxOrder) at x.
  [[nodiscard]] std::array<double, kMaxOrder + 1> derivatives(double x) const;
  [[nodiscard]] double sharpness() const { return c_; }

 private:
  double c_;
};

/**
 * \brief Separable generating function W(eta, z) = amplitude * b(eta) * b(2 z / L - 1),
 * compactly supported in (-1, 1) x (0, L).
 */
struct BumpProfile {
  double amplitude = 1.0;
  SmoothBump eta_bump{};
  SmoothBump axial_bump{};
};

/// \brief Sampling of the ansatz integrals.
struct AnsatzQuadrature {
  int radial_nodes = 6;         ///< Gauss-Legendre nodes on I_h
  int axial_nodes = 512;        ///< uniform nodes on [0, L]
  int support_nodes = 512;      ///< theta nodes across the compressed support, used when theta_nodes = 0
  int theta_nodes = 0;          ///< uniform nodes on [0, 2 pi); 0 derives it from support_nodes
  int min_support_nodes = 64;   ///< fewer theta nodes inside the support is under-resolved
};

/// \brief The three Korn ratios of the ansatz field.
struct AnsatzRatios {
  double korn = 0.0;           ///< ||e||^2 / ||grad phi||^2
  double angular_shear = 0.0;  ///< ||phi_theta,z||^2 / ||e||^2
  double radial_shear = 0.0;   ///< ||phi_r,z||^2 / ||e||^2
};

/**
 * \brief Evaluates the ratios of the field
 *   phi_r = -W_etaeta, phi_theta = r eps W_eta + (r-1) W_etaetaeta / eps,
 *   phi_z = (r-1) W_etaetaz - eps^2 W_z,  eta = theta / eps, eps = h^(1/4),
 * by quadrature over (r, theta, z).
 *
 * \throws Error QuadratureUnderResolved if fewer than min_support_nodes theta nodes fall in the
 *         support; InvalidArgument for a vanishing field.
 */
AnsatzRatios ansatz_ratios(const ShellGeometry& geom, const BumpProfile& bump = {}, const AnsatzQuadrature& quad = {});

}  // namespace koiter
