#pragma once

#include <array>
#include <vector>

#include "koiter/material.hpp"
#include "koiter/shell.hpp"
#include "koiter/spectral_reduction.hpp"

namespace koiter {

/**
 * \brief Parameters of the two-harmonic buckling mode.
 *
 * The target axial wave number is m_hat(h) = (sqrt(2 / lambda_star(h)))^alpha.
 */
struct BucklingModeSpec {
  ShellGeometry geom;
  IsotropicElasticity elastic;
  double alpha = 0.5;
  double margin = 3.0;  ///< sweep-window margin used for the membership check
};

/**
 * \brief Two-term mode sum over m in {m(h), m(h)+2} that satisfies the clamped-end conditions
 * phi_theta = phi_z = 0 at z = 0 and z = L.
 */
class BucklingMode {
 public:
  /// \throws Error WindowTooSmall if (m, n) or (m + 2, n) falls outside the sweep window.
  explicit BucklingMode(const BucklingModeSpec& spec);

  [[nodiscard]] const BucklingModeSpec& spec() const { return spec_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double target_m_hat() const { return target_; }
  [[nodiscard]] double a_theta() const { return a_theta_; }
  /// \brief The two harmonics, the second one carrying its sign flip.
  [[nodiscard]] const std::array<LinearizedMode, 2>& harmonics() const { return harmonics_; }

 private:
  BucklingModeSpec spec_;
  int m_ = 0;
  int n_ = 0;
  double target_ = 0.0;
  double a_theta_ = 0.0;
  std::array<LinearizedMode, 2> harmonics_;
};

/// \brief Circumferential amplitude -n (n^2 + (nu+2) m_hat^2) / (m_hat^2 + n^2)^2.
double mode_angular_amplitude(double m_hat, int n, double poisson_ratio);

/// \brief Axial index nearest to m_hat(h) L / pi (at least 1).
int mode_axial_index(const ShellGeometry& geom, const IsotropicElasticity& elastic, double alpha);

/**
 * \brief Circumferential index minimizing |m_c/(m_c^2+n^2) - sqrt(lambda_star / 2)| at the pair centre
 * m_c = pi (m+1) / L; ties go to the smaller n.
 */
int mode_circumferential_index(const ShellGeometry& geom, const IsotropicElasticity& elastic, int m);

/// \brief Sample counts; zero selects the minimum resolution rule.
struct GridResolution {
  int radial = 5;
  int theta = 0;  ///< intervals on [0, 2 pi], at least 8 n + 16
  int axial = 0;  ///< intervals on [0, L], at least 8 (m + 2) + 16
};

/**
 * \brief Displacement samples on a tensor grid in (r, theta, z); index i + nr (j + ntheta k).
 *
 * The theta grid includes both 0 and 2 pi, the z grid both 0 and L.
 */
struct DisplacementField {
  std::vector<double> r;
  std::vector<double> theta;
  std::vector<double> z;
  std::vector<double> phi_r;
  std::vector<double> phi_theta;
  std::vector<double> phi_z;

  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return i + r.size() * (j + theta.size() * k);
  }
  [[nodiscard]] std::size_t size() const { return r.size() * theta.size() * z.size(); }
};

/// \brief Sum of the given single Fourier modes at one point.
std::array<double, 3> evaluate_modes(const std::vector<LinearizedMode>& modes, double r, double theta, double z);

/// \brief Samples a sum of modes; theta/z resolution defaults use the largest indices present.
DisplacementField sample_modes(const ShellGeometry& geom, const std::vector<LinearizedMode>& modes,
                               GridResolution resolution = {}, unsigned jobs = 0);

/// \brief Samples the two-term buckling mode.
DisplacementField synthesize(const BucklingMode& mode, GridResolution resolution = {}, unsigned jobs = 0);

/// \brief Largest boundary trace |phi_theta|, |phi_z| at z = 0 and z = L, and the largest field value.
struct BoundaryTraces {
  double max_trace = 0.0;
  double field_scale = 0.0;

  [[nodiscard]] double relative() const { return field_scale > 0.0 ? max_trace / field_scale : max_trace; }
};

BoundaryTraces boundary_traces(const DisplacementField& field);

/// \brief Rayleigh quotient R1 of the mode relative to lambda*, with its per-harmonic parts.
struct QuotientBreakdown {
  double ratio = 0.0;  ///< R1 / lambda*
  double quotient = 0.0;
  double lambda_star = 0.0;
  std::array<double, 2> stiffness{};
  std::array<double, 2> denominator{};
  std::array<double, 2> harmonic_ratio{};  ///< (S_i / D_i) / lambda*
};

/// \brief R1 by exact per-harmonic quadrature; harmonics are orthogonal in z, so energies add.
QuotientBreakdown quotient_ratio(const BucklingMode& mode);
QuotientBreakdown quotient_ratio(const BucklingModeSpec& spec);

}  // namespace koiter
