#pragma once

#include "koiter/material.hpp"
#include "koiter/polynomial.hpp"
#include "koiter/shell.hpp"

namespace koiter {

/**
 * \brief Single Fourier mode with general radial profiles.
 *
 * phi_r = f_r(r) cos(n theta) cos(m_hat z), phi_theta = f_theta(r) sin(n theta) cos(m_hat z),
 * phi_z = f_z(r) cos(n theta) sin(m_hat z). For n = 0 the theta component is
 * identically zero and f_theta is ignored.
 */
struct FourierMode {
  WaveNumbers wn;
  Polynomial radial;
  Polynomial angular;
  Polynomial axial;
};

/**
 * \brief Mode whose theta and z profiles are affine in r (the image of the linearization).
 *
 * f_theta(r) = r a_theta + (r-1) n f_r(1) and f_z(r) = a_z + (r-1) m_hat f_r(1);
 * f_r is an arbitrary polynomial, conventionally normalized to f_r(1) = 1.
 */
class LinearizedMode {
 public:
  /// \brief For n = 0, a_theta is forced to zero (the theta component vanishes).
  LinearizedMode(WaveNumbers wn, double a_theta, double a_z, Polynomial radial = Polynomial::constant(1.0));

  /// \brief Mode with f_r(1) = 1 and f_r' equal to the pointwise optimal slope.
  [[nodiscard]] static LinearizedMode with_optimal_profile(WaveNumbers wn, double a_theta, double a_z,
                                                           const IsotropicElasticity& elastic);

  [[nodiscard]] const WaveNumbers& wave_numbers() const { return wn_; }
  [[nodiscard]] double a_theta() const { return a_theta_; }
  [[nodiscard]] double a_z() const { return a_z_; }
  [[nodiscard]] const Polynomial& radial() const { return radial_; }
  /// \brief f_r(1).
  [[nodiscard]] double midsurface_radial() const { return radial_(0.0); }

  [[nodiscard]] Polynomial angular() const;
  [[nodiscard]] Polynomial axial() const;
  [[nodiscard]] FourierMode to_fourier() const;
  /// \brief Same mode scaled so that f_r(1) = 1; throws ZeroDenominator if f_r(1) = 0.
  [[nodiscard]] LinearizedMode normalized() const;

 private:
  WaveNumbers wn_;
  double a_theta_;
  double a_z_;
  Polynomial radial_;
};

/**
 * \brief Radial amplitude functions of the linear strain e(phi) at radius r.
 *
 * Each entry multiplies the trig factor of the matching component:
 * rr, tt, zz with cos cos; rt with sin cos; rz with cos sin; tz with sin sin.
 */
SymStrain strain_components(const LinearizedMode& mode, const ShellGeometry& geom, double r);

/// \brief Strain amplitudes of a general single Fourier mode at radius r.
SymStrain mode_strain(const FourierMode& mode, const ShellGeometry& geom, double r);

/**
 * \brief Amplitudes of the simplified strain E(phi) at radius r.
 *
 * Drops the rt and rz shears, freezes f_r at the mid-surface in the hoop strain
 * and carries the 1/sqrt(r) weight that turns r dr into dr.
 */
SymStrain simplified_strain(const LinearizedMode& mode, const ShellGeometry& geom, double r);

/// \brief Hoop plus axial simplified strain times sqrt(r), the driver p(r) of the optimal slope.
double compression_driver(const LinearizedMode& mode, double r);

/// \brief Pointwise minimizer in f_r'(r) of the simplified energy density: -nu/(1-nu) p(r).
double optimal_fr_slope(const LinearizedMode& mode, const IsotropicElasticity& elastic, const ShellGeometry& geom,
                        double r);

/**
 * \brief Linearization operator: keeps phi_r, replaces the theta and z profiles by their
 * first-order expansion about r = 1 built from the values at the mid-surface.
 */
LinearizedMode linearize(const FourierMode& mode);

/// \brief Strain amplitudes integrated against the trig factors: sum over components of weight * density.
double weighted_energy(const IsotropicElasticity& elastic, const SymStrain& amplitudes, const AngularWeights& weights);

/// \brief Which strain measure a mode energy integrates.
enum class StrainModel { Exact, Simplified };

/**
 * \brief Stiffness energy of a linearized mode over the whole shell, by 16-node
 * Gauss-Legendre quadrature on I_h with the exact angular integrals.
 */
double mode_energy(const LinearizedMode& mode, const ShellGeometry& geom, const IsotropicElasticity& elastic,
                   StrainModel model);

/// \brief Mid-surface denominator ||phi_r,z(1, ., .)||^2 integrated over the shell (= h m_hat^2 f_r(1)^2 w_cs).
double midsurface_compression(const LinearizedMode& mode, const ShellGeometry& geom);

/// \brief Rayleigh quotient of the simplified energy over the mid-surface denominator.
double simplified_quotient(const LinearizedMode& mode, const ShellGeometry& geom, const IsotropicElasticity& elastic);

/// \brief Number of Gauss-Legendre nodes used for closed-form radial integrals.
inline constexpr int kRadialQuadratureNodes = 16;

}  // namespace koiter
