#include <gtest/gtest.h>

#include <cmath>

#include "koiter/errors.hpp"
#include "koiter/trivial_branch.hpp"

namespace koiter {
namespace {

/// Traction-free radial stretch of St. Venant-Kirchhoff, solved by hand:
/// (1+a)^2 = 1 + nu (2 lambda - lambda^2).
double svk_stretch(double nu, double lambda) { return std::sqrt(1.0 + nu * (2.0 * lambda - lambda * lambda)) - 1.0; }

TEST(TrivialBranch, NoLoadNoStretch) {
  const StVenantKirchhoff model(IsotropicElasticity::from_poisson(0.3));
  EXPECT_EQ(solve_radial_stretch(model, 0.0), 0.0);
}

TEST(TrivialBranch, StVenantKirchhoffClosedForm) {
  for (double nu : {0.0, 0.2, 0.3, 0.45, -0.4}) {
    const StVenantKirchhoff model(IsotropicElasticity(3.0, nu));
    for (double lambda : {1e-4, 1e-3, 1e-2, 0.1, 0.3}) {
      EXPECT_NEAR(solve_radial_stretch(model, lambda), svk_stretch(nu, lambda), 1e-12) << nu << " " << lambda;
    }
  }
}

TEST(TrivialBranch, FirstOrderStretch) {
  const StVenantKirchhoff model(IsotropicElasticity::from_poisson(0.3));
  EXPECT_NEAR(solve_radial_stretch(model, 1e-4), 3e-5, 1e-8);
}

TEST(TrivialBranch, LinearizedSlopeIsPoissonRatio) {
  for (double nu : {0.0, 0.3, 0.45}) {
    const StVenantKirchhoff model(IsotropicElasticity::from_poisson(nu));
    EXPECT_NEAR(linearized_displacement_slope(model), nu, 1e-6);
  }
}

TEST(TrivialBranch, QuadraticRemainderIsBounded) {
  // a = nu lambda - nu (1+nu) lambda^2 / 2 + O(lambda^3).
  for (double nu : {0.3, 0.45}) {
    const StVenantKirchhoff model(IsotropicElasticity::from_poisson(nu));
    const double limit = nu * (1.0 + nu) / 2.0;
    for (double lambda : {1e-4, 1e-3, 1e-2}) {
      const double ratio = std::abs(solve_radial_stretch(model, lambda) - nu * lambda) / (lambda * lambda);
      EXPECT_NEAR(ratio, limit, 2.0 * lambda) << nu << " " << lambda;
    }
  }
}

TEST(TrivialBranch, UserModelWithoutRootIsReported) {
  const ResidualModel model([](double c1, double c3) { return (c1 - 1.0) * (c1 - 1.0) + (c3 - 1.0) * (c3 - 1.0); });
  try {
    (void)solve_radial_stretch(model, 0.1);
    FAIL() << "expected NoRoot";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoRoot);
  }
}

TEST(TrivialBranch, PrestressedModelIsRejected) {
  const ResidualModel model([](double c1, double) { return c1; });
  try {
    (void)solve_radial_stretch(model, 0.1);
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(TrivialBranch, UserModelMatchesBuiltIn) {
  const auto elastic = IsotropicElasticity::from_poisson(0.3);
  const StVenantKirchhoff svk(elastic);
  const ResidualModel wrapped([&](double c1, double c3) { return svk.radial_stress(c1, c3); });
  EXPECT_NEAR(solve_radial_stretch(wrapped, 0.05), solve_radial_stretch(svk, 0.05), 1e-14);
}

}  // namespace
}  // namespace koiter
