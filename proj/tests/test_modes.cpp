#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "koiter/critical_load.hpp"
#include "koiter/errors.hpp"
#include "koiter/modes.hpp"

namespace koiter {
namespace {

constexpr double kPi = std::numbers::pi;

BucklingModeSpec spec_at(double h, double nu, double alpha = 0.5) {
  return {ShellGeometry(h, kPi), IsotropicElasticity::from_poisson(nu), alpha};
}

TEST(Modes, IndicesAtHalfExponent) {
  const std::array<std::tuple<double, int, int>, 3> expected{{{0.03, 3, 5}, {0.01, 4, 8}, {0.003, 6, 14}}};
  for (const auto& [h, m, n] : expected) {
    const BucklingMode mode(spec_at(h, 0.3));
    EXPECT_EQ(mode.m(), m) << h;
    EXPECT_EQ(mode.n(), n) << h;
    // m_hat(h) = (2 / lambda*)^(alpha / 2)
    EXPECT_NEAR(mode.target_m_hat(), std::pow(2.0 / lambda_star(h, 0.3), 0.25), 1e-12);
  }
}

TEST(Modes, AngularAmplitude) {
  EXPECT_DOUBLE_EQ(mode_angular_amplitude(2.0, 3, 0.3), -3.0 * (9.0 + 2.3 * 4.0) / (13.0 * 13.0));
  EXPECT_EQ(mode_angular_amplitude(2.0, 0, 0.3), 0.0);
}

TEST(Modes, HarmonicsShareAmplitudesAndFlipSign) {
  const BucklingMode mode(spec_at(0.01, 1.0 / 3.0));
  const auto& h = mode.harmonics();
  EXPECT_EQ(h[0].wave_numbers().m(), mode.m());
  EXPECT_EQ(h[1].wave_numbers().m(), mode.m() + 2);
  EXPECT_EQ(h[0].wave_numbers().n(), h[1].wave_numbers().n());
  EXPECT_GT(h[0].midsurface_radial(), 0.0);
  EXPECT_LT(h[1].midsurface_radial(), 0.0);
}

TEST(Modes, ClampedBoundaryTraces) {
  for (double nu : {0.3, 1.0 / 3.0}) {
    for (double h : {0.03, 0.01, 0.003}) {
      const BucklingMode mode(spec_at(h, nu));
      EXPECT_LE(boundary_traces(synthesize(mode, {}, 1)).relative(), 1e-12) << nu << " " << h;
    }
  }
}

TEST(Modes, SingleHarmonicFieldMatchesProfiles) {
  const BucklingMode mode(spec_at(0.01, 1.0 / 3.0));
  const auto& first = mode.harmonics()[0];
  const double n = first.wave_numbers().n(), mh = first.wave_numbers().m_hat();
  for (double r : {0.995, 1.0, 1.004}) {
    for (double theta : {0.1, 2.0}) {
      for (double z : {0.3, 2.9}) {
        const auto u = evaluate_modes({first}, r, theta, z);
        const double s = r - 1.0;
        EXPECT_NEAR(u[0], first.radial()(s) * std::cos(n * theta) * std::cos(mh * z), 1e-15);
        EXPECT_NEAR(u[1], first.angular()(s) * std::sin(n * theta) * std::cos(mh * z), 1e-15);
        EXPECT_NEAR(u[2], first.axial()(s) * std::cos(n * theta) * std::sin(mh * z), 1e-15);
      }
    }
  }
}

TEST(Modes, GridIncludesEndpoints) {
  const BucklingMode mode(spec_at(0.01, 0.3));
  const auto field = synthesize(mode, {}, 1);
  EXPECT_EQ(field.theta.front(), 0.0);
  EXPECT_DOUBLE_EQ(field.theta.back(), 2.0 * kPi);
  EXPECT_EQ(field.z.front(), 0.0);
  EXPECT_DOUBLE_EQ(field.z.back(), kPi);
  EXPECT_GE(static_cast<int>(field.theta.size()) - 1, 8 * mode.n() + 16);
  EXPECT_GE(static_cast<int>(field.z.size()) - 1, 8 * (mode.m() + 2) + 16);
  EXPECT_EQ(field.phi_r.size(), field.size());
  const auto threaded = synthesize(mode, {}, 4);
  EXPECT_EQ(threaded.phi_z, field.phi_z);
}

TEST(Modes, QuotientIsSumOfHarmonicParts) {
  const auto q = quotient_ratio(spec_at(0.01, 1.0 / 3.0));
  EXPECT_NEAR(q.quotient, (q.stiffness[0] + q.stiffness[1]) / (q.denominator[0] + q.denominator[1]), 1e-15);
  EXPECT_NEAR(q.ratio, q.quotient / q.lambda_star, 1e-15);
  for (int i = 0; i < 2; ++i) {
    EXPECT_NEAR(q.harmonic_ratio[i], q.stiffness[i] / q.denominator[i] / q.lambda_star, 1e-13);
  }
}

TEST(Modes, QuotientApproachesClassicalLoad) {
  for (double nu : {0.3, 1.0 / 3.0}) {
    double previous = std::numeric_limits<double>::infinity();
    for (double h : {0.03, 0.01, 0.003}) {
      const auto q = quotient_ratio(spec_at(h, nu));
      EXPECT_GE(q.ratio, 1.0 - 1e-3) << nu << " " << h;
      EXPECT_LT(std::abs(q.ratio - 1.0), previous) << nu << " " << h;
      previous = std::abs(q.ratio - 1.0);
      if (h <= 0.01) EXPECT_LT(std::abs(q.harmonic_ratio[1] - 1.0), 0.05) << nu << " " << h;
    }
  }
}

TEST(Modes, HarmonicOutsideWindowIsReported) {
  BucklingModeSpec spec = spec_at(0.01, 0.3, 1.0);
  spec.margin = 1.0;
  try {
    (void)BucklingMode(spec);
    FAIL() << "expected WindowTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowTooSmall);
  }
}

}  // namespace
}  // namespace koiter
