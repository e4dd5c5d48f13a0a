#pragma once

namespace koiter {

/**
 * \brief Symmetric tensor in the local cylindrical frame (r, theta, z).
 *
 * Used both for strains and for stress-shaped results. Off-diagonal entries
 * store the tensor component itself (not the engineering shear strain).
 */
struct SymStrain {
  double rr = 0.0;
  double tt = 0.0;
  double zz = 0.0;
  double rt = 0.0;
  double rz = 0.0;
  double tz = 0.0;

  [[nodiscard]] static SymStrain diagonal(double rr, double tt, double zz) { return {rr, tt, zz, 0.0, 0.0, 0.0}; }

  [[nodiscard]] double trace() const { return rr + tt + zz; }
  /// \brief Squared Frobenius norm, counting each shear entry twice.
  [[nodiscard]] double frobenius_sq() const {
    return rr * rr + tt * tt + zz * zz + 2.0 * (rt * rt + rz * rz + tz * tz);
  }

  friend SymStrain operator+(const SymStrain& a, const SymStrain& b) {
    return {a.rr + b.rr, a.tt + b.tt, a.zz + b.zz, a.rt + b.rt, a.rz + b.rz, a.tz + b.tz};
  }
  friend SymStrain operator-(const SymStrain& a, const SymStrain& b) {
    return {a.rr - b.rr, a.tt - b.tt, a.zz - b.zz, a.rt - b.rt, a.rz - b.rz, a.tz - b.tz};
  }
  friend SymStrain operator*(double c, const SymStrain& a) {
    return {c * a.rr, c * a.tt, c * a.zz, c * a.rt, c * a.rz, c * a.tz};
  }
};

/**
 * \brief Isotropic linear elasticity described by Young's modulus and Poisson's ratio.
 *
 * All Rayleigh quotients use the normalized tensor L0/E, so E only enters
 * dimensional stress reporting.
 */
class IsotropicElasticity {
 public:
  /// \brief Throws InvalidArgument unless E > 0 and -1 < nu < 1/2.
  IsotropicElasticity(double youngs_modulus, double poisson_ratio);
  /// \brief Unit Young's modulus.
  [[nodiscard]] static IsotropicElasticity from_poisson(double poisson_ratio) { return {1.0, poisson_ratio}; }

  [[nodiscard]] double youngs_modulus() const { return E_; }
  [[nodiscard]] double poisson_ratio() const { return nu_; }
  [[nodiscard]] double shear_modulus() const { return E_ / (2.0 * (1.0 + nu_)); }
  [[nodiscard]] double bulk_modulus() const { return E_ / (3.0 * (1.0 - 2.0 * nu_)); }
  [[nodiscard]] double lame_lambda() const { return E_ * nu_ / ((1.0 + nu_) * (1.0 - 2.0 * nu_)); }
  /// \brief Ratio of the Lame moduli lambda/mu = 2 nu / (1 - 2 nu).
  [[nodiscard]] double lame_ratio() const { return 2.0 * nu_ / (1.0 - 2.0 * nu_); }
  /// \brief lame_ratio / (lame_ratio + 2) = nu / (1 - nu); the weight of the optimal radial relaxation.
  [[nodiscard]] double relaxation_factor() const { return nu_ / (1.0 - nu_); }

  /// \brief Eigenvalue of L0/E on deviatoric strains.
  [[nodiscard]] double shear_eigenvalue() const { return 1.0 / (1.0 + nu_); }
  /// \brief Eigenvalue of L0/E on the identity direction.
  [[nodiscard]] double volumetric_eigenvalue() const { return 1.0 / (1.0 - 2.0 * nu_); }

 private:
  double E_;
  double nu_;
};

/**
 * \brief Normalized elastic energy density <(L0/E) e, e>.
 *
 * Equals (nu/(1-2nu) tr(e)^2 + |e|^2) / (1+nu).
 */
double energy_density(const IsotropicElasticity& elastic, const SymStrain& e);

/// \brief Linear map (L0/E) e = (e + nu/(1-2nu) tr(e) I) / (1+nu) associated with energy_density.
SymStrain apply_normalized(const IsotropicElasticity& elastic, const SymStrain& e);

/// \brief Largest alpha with energy_density(e) >= alpha |e|^2: the smaller isotropic eigenvalue.
double coercivity_bound(const IsotropicElasticity& elastic);

}  // namespace koiter
