#include "koiter/material.hpp"

#include <algorithm>
#include <cmath>

#include "koiter/errors.hpp"

namespace koiter {

IsotropicElasticity::IsotropicElasticity(double youngs_modulus, double poisson_ratio)
    : E_(youngs_modulus), nu_(poisson_ratio) {
  require(std::isfinite(E_) && E_ > 0.0, "Young's modulus must be positive and finite");
  require(std::isfinite(nu_) && nu_ > -1.0 && nu_ < 0.5, "Poisson's ratio must lie in the open interval (-1, 1/2)");
}

double energy_density(const IsotropicElasticity& elastic, const SymStrain& e) {
  const double nu = elastic.poisson_ratio();
  const double tr = e.trace();
  return (nu / (1.0 - 2.0 * nu) * tr * tr + e.frobenius_sq()) / (1.0 + nu);
}

SymStrain apply_normalized(const IsotropicElasticity& elastic, const SymStrain& e) {
  const double nu = elastic.poisson_ratio();
  const double volumetric = nu / (1.0 - 2.0 * nu) * e.trace();
  SymStrain out = e;
  out.rr += volumetric;
  out.tt += volumetric;
  out.zz += volumetric;
  return (1.0 / (1.0 + nu)) * out;
}

double coercivity_bound(const IsotropicElasticity& elastic) {
  return std::min(elastic.shear_eigenvalue(), elastic.volumetric_eigenvalue());
}

}  // namespace koiter
