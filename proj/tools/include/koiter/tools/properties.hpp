#pragma once

#include <cstdint>
#include <string>

namespace koiter::tools {

/// \brief Summary of a randomized property check.
struct PropertyReport {
  bool passed = false;
  int samples = 0;
  double worst = 0.0;  ///< largest violation measure seen (meaning depends on the property)
  std::string detail;
};

/// \brief energy_density(c e) = c^2 energy_density(e) on random (e, c), relative error <= 1e-12.
PropertyReport check_homogeneity(std::uint64_t seed, int samples = 1000);

/// \brief energy_density(e) >= coercivity_bound |e|^2 (1 - 1e-12) on random strains and Poisson ratios.
PropertyReport check_coercivity(std::uint64_t seed, int samples = 10000);

/// \brief Energy of a sum of three distinct Fourier modes equals the sum of their energies (3D quadrature).
PropertyReport check_parseval(std::uint64_t seed, int trials = 5);

/// \brief int (int_1^r f)^2 dr <= h^2/4 int f^2 dr on random polynomials.
PropertyReport check_integral_inequality(std::uint64_t seed, int samples = 200);

/// \brief (1-h-h^2) lambda3_tilde <= lambda3_full <= (1+h+h^2) lambda3_tilde on random (h <= 0.1, m, n, nu).
PropertyReport check_sandwich(std::uint64_t seed, int samples = 100);

}  // namespace koiter::tools
