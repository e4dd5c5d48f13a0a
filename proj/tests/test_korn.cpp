#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "koiter/ansatz.hpp"
#include "koiter/critical_load.hpp"
#include "koiter/errors.hpp"
#include "koiter/korn.hpp"
#include "koiter/statistics.hpp"

namespace koiter {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Korn, ModeRatiosAreConsistent) {
  const ShellGeometry geom(0.01, kPi);
  const auto axi = korn_ratios(geom, WaveNumbers(3, 0, kPi), {});
  EXPECT_EQ(axi.angular_shear, 0.0);
  const auto r = korn_ratios(geom, WaveNumbers(2, 5, kPi), {});
  // ||e||^2 <= ||grad phi||^2 pointwise, so the Korn ratio lies in (0, 1].
  EXPECT_GT(r.korn, 0.0);
  EXPECT_LE(r.korn, 1.0 + 1e-12);
  EXPECT_GT(r.radial_shear, 0.0);
  EXPECT_GT(r.weighted, 0.0);
}

TEST(Korn, ScanReportsAllKinds) {
  const ShellGeometry geom(0.05, kPi);
  const CriticalLoadProblem problem(geom, IsotropicElasticity::from_poisson(0.3));
  const auto estimates = korn_mode_scan(geom, {}, problem.window(), 1);
  ASSERT_EQ(estimates.size(), 4u);
  EXPECT_EQ(estimates[0].kind, KornKind::KornConstant);
  EXPECT_EQ(estimates[3].kind, KornKind::WeightedKorn);
  EXPECT_EQ(to_string(KornKind::AngularShear), "theta_z");
  for (const auto& e : estimates) EXPECT_EQ(e.h, 0.05);
  // Deterministic regardless of the thread count.
  const auto again = korn_mode_scan(geom, {}, problem.window(), 3);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(estimates[k].value, again[k].value);
}

TEST(Korn, AnsatzScalings) {
  const std::vector<double> hs{1e-4, 5e-5, 2e-5, 1e-5};
  std::vector<double> korn, angular, radial;
  for (double h : hs) {
    const auto r = ansatz_ratios(ShellGeometry(h, kPi));
    korn.push_back(r.korn);
    angular.push_back(r.angular_shear);
    radial.push_back(r.radial_shear);
  }
  EXPECT_NEAR(loglog_slope(hs, korn), 1.5, 0.15);
  EXPECT_NEAR(loglog_slope(hs, angular), -0.5, 0.2);
  EXPECT_NEAR(loglog_slope(hs, radial), -1.0, 0.15);
}

TEST(Korn, AnsatzIsQuadratureConverged) {
  const ShellGeometry geom(1e-3, kPi);
  const auto base = ansatz_ratios(geom);
  const auto fine = ansatz_ratios(geom, {}, AnsatzQuadrature{8, 1024, 1024, 0, 64});
  EXPECT_NEAR(base.korn / fine.korn, 1.0, 1e-6);
  EXPECT_NEAR(base.angular_shear / fine.angular_shear, 1.0, 1e-6);
  EXPECT_NEAR(base.radial_shear / fine.radial_shear, 1.0, 1e-6);
}

TEST(Korn, AnsatzRejectsDegenerateInput) {
  const ShellGeometry geom(1e-3, kPi);
  BumpProfile zero;
  zero.amplitude = 0.0;
  try {
    (void)ansatz_ratios(geom, zero);
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  try {
    (void)ansatz_ratios(geom, {}, AnsatzQuadrature{6, 512, 512, 64, 64});
    FAIL() << "expected QuadratureUnderResolved";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuadratureUnderResolved);
  }
}

TEST(Korn, SmoothBumpDerivatives) {
  const SmoothBump bump(1.0);
  EXPECT_DOUBLE_EQ(bump.derivatives(0.0)[0], 1.0);
  EXPECT_EQ(bump.derivatives(1.0)[0], 0.0);
  EXPECT_EQ(bump.derivatives(-1.5)[2], 0.0);
  // Central differences of each order against the next.
  const double x = 0.37, step = 1e-5;
  const auto lo = bump.derivatives(x - step), hi = bump.derivatives(x + step), mid = bump.derivatives(x);
  for (int k = 0; k < SmoothBump::kMaxOrder; ++k) {
    EXPECT_NEAR((hi[k] - lo[k]) / (2 * step), mid[k + 1], 1e-5 * std::max(1.0, std::abs(mid[k + 1])));
  }
}

TEST(Equivalence, CompressionGapIsNonnegative) {
  const ShellGeometry geom(0.01, kPi);
  const auto elastic = IsotropicElasticity::from_poisson(0.3);
  for (auto [m, n] : {std::pair{1, 0}, {1, 4}, {6, 9}, {20, 3}}) {
    const auto gap = equivalence_gap(geom, elastic, WaveNumbers(m, n, kPi), {});
    EXPECT_GE(gap.compression_gap_min, -1e-10) << m << "," << n;
    EXPECT_GE(gap.compression_gap, gap.compression_gap_min);
    EXPECT_GE(gap.midsurface_gap, 0.0);
  }
}

TEST(Equivalence, GapsVanishAndMidsurfaceConstantIsStable) {
  const auto elastic = IsotropicElasticity::from_poisson(0.3);
  std::vector<double> hs{0.05, 0.02, 0.01}, scaled, constants;
  for (double h : hs) {
    const CriticalLoadProblem problem(ShellGeometry(h, kPi), elastic);
    const auto gap = equivalence_window_gap(problem.geometry(), elastic, problem.window(), {}, 0);
    scaled.push_back(lambda_star(problem) * gap.compression_gap);
    constants.push_back(gap.midsurface_constant);
  }
  EXPECT_TRUE(strictly_decreasing(scaled));
  EXPECT_GT(loglog_slope(hs, scaled), 0.3);
  const auto [lo, hi] = std::minmax_element(constants.begin(), constants.end());
  EXPECT_LE(*hi / *lo, 1.1);
}

}  // namespace
}  // namespace koiter
