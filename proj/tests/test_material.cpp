#include <gtest/gtest.h>

#include <random>

#include "koiter/errors.hpp"
#include "koiter/material.hpp"
#include "koiter/trivial_branch.hpp"

namespace koiter {
namespace {

SymStrain random_strain(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

TEST(Material, ZeroStrainHasZeroEnergy) {
  EXPECT_EQ(energy_density(IsotropicElasticity::from_poisson(0.3), SymStrain{}), 0.0);
}

TEST(Material, UniaxialStrainDensity) {
  // (1/1.3) (0.3/0.4 + 1) = 1.75 / 1.3
  const double expected = 1.75 / 1.3;
  EXPECT_NEAR(energy_density(IsotropicElasticity::from_poisson(0.3), SymStrain::diagonal(1, 0, 0)), expected, 1e-15);
  EXPECT_NEAR(expected, 1.3461538461538463, 1e-15);
}

TEST(Material, ZeroPoissonIsFrobeniusNorm) {
  std::mt19937_64 rng(3);
  const auto elastic = IsotropicElasticity::from_poisson(0.0);
  for (int i = 0; i < 100; ++i) {
    const auto e = random_strain(rng);
    EXPECT_NEAR(energy_density(elastic, e), e.frobenius_sq(), 1e-14);
  }
}

TEST(Material, DensityIsContractionWithNormalizedStress) {
  std::mt19937_64 rng(5);
  const auto elastic = IsotropicElasticity::from_poisson(0.27);
  for (int i = 0; i < 100; ++i) {
    const auto e = random_strain(rng);
    const auto s = apply_normalized(elastic, e);
    const double contraction =
        s.rr * e.rr + s.tt * e.tt + s.zz * e.zz + 2.0 * (s.rt * e.rt + s.rz * e.rz + s.tz * e.tz);
    EXPECT_NEAR(energy_density(elastic, e), contraction, 1e-13);
  }
}

TEST(Material, CoercivityBound) {
  EXPECT_DOUBLE_EQ(coercivity_bound(IsotropicElasticity::from_poisson(0.0)), 1.0);
  EXPECT_DOUBLE_EQ(coercivity_bound(IsotropicElasticity::from_poisson(0.3)), 1.0 / 1.3);
  // Near incompressibility the shear eigenvalue stays the minimum.
  EXPECT_DOUBLE_EQ(coercivity_bound(IsotropicElasticity::from_poisson(0.4999)), 1.0 / 1.4999);
  // Auxetic materials are limited by the volumetric eigenvalue.
  EXPECT_DOUBLE_EQ(coercivity_bound(IsotropicElasticity::from_poisson(-0.5)), 0.5);

  std::mt19937_64 rng(11);
  const auto elastic = IsotropicElasticity::from_poisson(0.3);
  const double alpha = coercivity_bound(elastic);
  for (int i = 0; i < 1000; ++i) {
    const auto e = random_strain(rng);
    EXPECT_GE(energy_density(elastic, e), alpha * e.frobenius_sq() * (1.0 - 1e-12));
  }
}

TEST(Material, ModuliRelations) {
  const IsotropicElasticity elastic(2.0, 0.25);
  EXPECT_DOUBLE_EQ(elastic.shear_modulus(), 0.8);
  EXPECT_DOUBLE_EQ(elastic.lame_lambda(), 0.8);
  EXPECT_DOUBLE_EQ(elastic.lame_ratio(), 1.0);
  // Lambda / (Lambda + 2) = nu / (1 - nu)
  EXPECT_DOUBLE_EQ(elastic.relaxation_factor(), 1.0 / 3.0);
}

TEST(Material, RejectsInvalidParameters) {
  for (double nu : {0.5, -1.0, 0.7}) {
    try {
      (void)IsotropicElasticity::from_poisson(nu);
      FAIL() << "accepted nu = " << nu;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
  }
  EXPECT_THROW(IsotropicElasticity(0.0, 0.3), Error);
}

TEST(Material, TrivialStressMatchesStrain) {
  const IsotropicElasticity unit(1.0, 0.3);
  const auto s = trivial_stress(unit);
  EXPECT_EQ(s.zz, -1.0);
  EXPECT_EQ(s.rr, 0.0);
  EXPECT_EQ(s.tt, 0.0);
  EXPECT_EQ(trivial_stress(IsotropicElasticity(200e9, 0.3)).zz, -200e9);

  // The strain of u = nu r e_r - z e_z under the normalized form reproduces -e_z e_z.
  for (double nu : {0.0, 0.3, 0.45}) {
    const auto elastic = IsotropicElasticity::from_poisson(nu);
    const auto e = trivial_strain(elastic);
    EXPECT_DOUBLE_EQ(e.rr, nu);
    EXPECT_DOUBLE_EQ(e.zz, -1.0);
    const auto stress = apply_normalized(elastic, e);
    EXPECT_NEAR(stress.rr, 0.0, 1e-15);
    EXPECT_NEAR(stress.tt, 0.0, 1e-15);
    EXPECT_NEAR(stress.zz, -1.0, 1e-15);
  }
}

}  // namespace
}  // namespace koiter
