#pragma once

#include <Eigen/Dense>
#include <vector>

#include "koiter/material.hpp"
#include "koiter/shell.hpp"
#include "koiter/spectral_reduction.hpp"

namespace koiter {

/**
 * \brief Chebyshev polynomial basis of degree p per displacement component on I_h,
 * integrated with Gauss-Legendre (default 2p nodes).
 */
struct RadialDiscretization {
  int degree = 12;
  int quadrature_nodes = 0;  ///< 0 selects 2 * degree

  [[nodiscard]] int nodes() const { return quadrature_nodes > 0 ? quadrature_nodes : 2 * degree; }
  /// \brief Throws InvalidArgument unless p >= 4 and the rule is exact for degree 2p - 1.
  void validate() const;
};

/// \brief Radial profile space of a single Fourier mode.
enum class ModeSpace {
  General,     ///< independent polynomial profiles f_r, f_theta, f_z
  Linearized,  ///< polynomial f_r; f_theta, f_z affine with amplitudes a_theta, a_z
};

/// \brief Quadratic forms available on a single Fourier mode (integrated over the whole shell).
enum class FormKind {
  Stiffness,              ///< int <(L0/E) e, e>
  SimplifiedStiffness,    ///< int <(L0/E) E, E> with the simplified strain
  StrainNorm,             ///< ||e||^2
  GradientNorm,           ///< ||grad phi||^2
  RadialShear,            ///< ||phi_r,z||^2
  AngularShear,           ///< ||phi_theta,z||^2
  AxialStretch,           ///< ||phi_z,z||^2
  Compression,            ///< sum of the three z-derivative norms (magnitude of the stress term)
  MidsurfaceRadialShear,  ///< ||phi_r,z(1, ., .)||^2 over the shell
  RadialNorm,             ///< ||phi_r||^2
};

/// \brief Destabilizing form of a Rayleigh quotient.
enum class DenominatorKind {
  Compression,            ///< R: full stress term
  RadialShear,            ///< R1
  MidsurfaceRadialShear,  ///< R2 and R3
};

/// \brief Strain used in the numerator of a Rayleigh quotient.
enum class NumeratorKind { Exact, Simplified };

/// \brief Layout of the coefficient vector of a discretized mode.
struct DofMap {
  ModeSpace space = ModeSpace::General;
  int radial_offset = 0;
  int radial_count = 0;
  int angular_offset = 0;
  int angular_count = 0;
  int axial_offset = 0;
  int axial_count = 0;

  [[nodiscard]] int size() const { return radial_count + angular_count + axial_count; }
};

/**
 * \brief Radial profiles (values and r-derivatives) of every basis field at the quadrature nodes.
 *
 * Each profile matrix has one row per node and one column per degree of freedom.
 */
class ModeBasis {
 public:
  /// \brief Chebyshev basis of the given space.
  ModeBasis(const ShellGeometry& geom, const WaveNumbers& wn, ModeSpace space, const RadialDiscretization& disc);
  /// \brief One column per given mode (all must share the wave numbers), with `nodes` quadrature nodes.
  ModeBasis(const ShellGeometry& geom, const std::vector<FourierMode>& modes, int nodes);

  [[nodiscard]] const ShellGeometry& geometry() const { return geom_; }
  [[nodiscard]] const WaveNumbers& wave_numbers() const { return wn_; }
  [[nodiscard]] const DofMap& dofs() const { return dofs_; }
  [[nodiscard]] Eigen::Index size() const { return radial_.cols(); }

  [[nodiscard]] const Eigen::VectorXd& radii() const { return radii_; }
  /// \brief Quadrature weights times r (the cylindrical measure).
  [[nodiscard]] const Eigen::VectorXd& measure() const { return measure_; }
  [[nodiscard]] const Eigen::MatrixXd& radial() const { return radial_; }
  [[nodiscard]] const Eigen::MatrixXd& radial_slope() const { return radial_slope_; }
  [[nodiscard]] const Eigen::MatrixXd& angular() const { return angular_; }
  [[nodiscard]] const Eigen::MatrixXd& angular_slope() const { return angular_slope_; }
  [[nodiscard]] const Eigen::MatrixXd& axial() const { return axial_; }
  [[nodiscard]] const Eigen::MatrixXd& axial_slope() const { return axial_slope_; }
  /// \brief f_r(1) of every basis field.
  [[nodiscard]] const Eigen::RowVectorXd& midsurface_radial() const { return midsurface_radial_; }

 private:
  void allocate(int nodes, Eigen::Index columns);

  ShellGeometry geom_;
  WaveNumbers wn_;
  DofMap dofs_;
  Eigen::VectorXd radii_;
  Eigen::VectorXd measure_;
  Eigen::MatrixXd radial_, radial_slope_, angular_, angular_slope_, axial_, axial_slope_;
  Eigen::RowVectorXd midsurface_radial_;
};

/// \brief Gram matrix of a quadratic form on the basis (theta and z integrated analytically).
Eigen::MatrixXd assemble_form(FormKind kind, const ModeBasis& basis, const IsotropicElasticity& elastic);

/// \brief Stiffness form A and destabilizing form B of one discretized Fourier mode.
struct ModePencil {
  Eigen::MatrixXd stiffness;
  Eigen::MatrixXd destabilizing;
  DofMap dofs;
};

/**
 * \brief Builds the pencil of a Rayleigh quotient restricted to one Fourier mode.
 * \throws Error AssemblyDegenerate if the stiffness form is not positive definite.
 */
ModePencil assemble_pencil(const ShellGeometry& geom, const IsotropicElasticity& elastic, const WaveNumbers& wn,
                           DenominatorKind denominator, const RadialDiscretization& disc,
                           ModeSpace space = ModeSpace::General, NumeratorKind numerator = NumeratorKind::Exact);

/// \brief Generalized eigenpairs B x = mu A x, ascending mu, with x^T A x = 1.
struct PencilSpectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/**
 * \brief Cholesky factorization of a diagonally equilibrated positive-definite form,
 * reused for several right-hand forms.
 */
class PencilFactorization {
 public:
  /// \throws Error AssemblyDegenerate if `a` is not positive definite.
  explicit PencilFactorization(const Eigen::MatrixXd& a);

  [[nodiscard]] PencilSpectrum spectrum(const Eigen::MatrixXd& b) const;
  [[nodiscard]] Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& b) const;

 private:
  [[nodiscard]] Eigen::MatrixXd congruence(const Eigen::MatrixXd& b) const;

  Eigen::VectorXd scaling_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// \brief Full generalized spectrum of a pencil.
PencilSpectrum pencil_spectrum(const ModePencil& pencil);

/**
 * \brief inf over x with Bx != 0 of x^T A x / x^T B x = 1 / mu_max.
 * \throws Error ZeroDenominator if B vanishes; AssemblyDegenerate if A is not positive definite.
 */
double min_rayleigh(const ModePencil& pencil);

/// \brief Every single-mode quadratic form evaluated on one Fourier mode.
struct ModeIntegrals {
  double stiffness = 0.0;
  double simplified_stiffness = 0.0;
  double strain_norm = 0.0;
  double gradient_norm = 0.0;
  double radial_shear = 0.0;
  double angular_shear = 0.0;
  double axial_stretch = 0.0;
  double midsurface_radial_shear = 0.0;
  double radial_norm = 0.0;

  [[nodiscard]] double compression() const { return radial_shear + angular_shear + axial_stretch; }
};

/// \brief Direct quadrature of all forms on a polynomial Fourier mode (default 32 nodes).
ModeIntegrals evaluate_forms(const ShellGeometry& geom, const IsotropicElasticity& elastic, const FourierMode& mode,
                             int nodes = 32);

}  // namespace koiter
