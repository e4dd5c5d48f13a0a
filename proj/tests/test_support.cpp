#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "koiter/errors.hpp"
#include "koiter/parallel.hpp"
#include "koiter/polynomial.hpp"
#include "koiter/quadrature.hpp"
#include "koiter/shell.hpp"
#include "koiter/statistics.hpp"

namespace koiter {
namespace {

TEST(Quadrature, ExactForDegreeTwoNMinusOne) {
  for (int n : {1, 4, 12, 24}) {
    const auto rule = gauss_legendre(n, 0.5, 2.0);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0.0;
      for (std::size_t q = 0; q < rule.size(); ++q) sum += rule.weights[q] * std::pow(rule.nodes[q], k);
      const double exact = (std::pow(2.0, k + 1) - std::pow(0.5, k + 1)) / (k + 1);
      EXPECT_NEAR(sum / exact, 1.0, 1e-13) << n << " " << k;
    }
    for (std::size_t q = 1; q < rule.size(); ++q) EXPECT_LT(rule.nodes[q - 1], rule.nodes[q]);
  }
  EXPECT_THROW((void)gauss_legendre(0), Error);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p{1.0, 2.0};       // 1 + 2s
  const Polynomial q{0.0, 0.0, 3.0};  // 3s^2
  EXPECT_DOUBLE_EQ((p * q)(0.5), 2.0 * 0.75);
  EXPECT_DOUBLE_EQ((p + q)(2.0), 5.0 + 12.0);
  EXPECT_DOUBLE_EQ((p - q)(1.0), 0.0);
  EXPECT_DOUBLE_EQ((2.0 * p)(1.0), 6.0);
  EXPECT_EQ((p * q).degree(), 3);
  EXPECT_DOUBLE_EQ(q.derivative()(1.0), 6.0);
  EXPECT_DOUBLE_EQ(q.antiderivative()(2.0), 8.0);
  EXPECT_EQ(q.antiderivative()(0.0), 0.0);
  EXPECT_DOUBLE_EQ(p.at_radius(1.5), 2.0);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Statistics, LogLogSlope) {
  const std::vector<double> x{0.1, 0.05, 0.01};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 1.5));
  EXPECT_NEAR(loglog_slope(x, y), 1.5, 1e-13);
  EXPECT_THROW((void)loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), Error);
  EXPECT_THROW((void)loglog_slope(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, -1.0}), Error);
  EXPECT_TRUE(strictly_decreasing(std::vector<double>{3, 2, 1}));
  EXPECT_FALSE(strictly_decreasing(std::vector<double>{3, 3, 1}));
}

TEST(Parallel, CoversEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, RethrowsLowestFailingIndex) {
  for (unsigned jobs : {1u, 3u, 8u}) {
    try {
      parallel_for(100, jobs, [](std::size_t i) {
        if (i == 17 || i == 80) throw std::runtime_error(std::to_string(i));
      });
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "17");
    }
  }
}

TEST(Errors, NamesAndKinds) {
  const Error e(ErrorKind::WindowTooSmall, "edge");
  EXPECT_EQ(e.name(), "WindowTooSmall");
  EXPECT_TRUE(e.is_numerical());
  EXPECT_STREQ(e.what(), "WindowTooSmall: edge");
  EXPECT_FALSE(Error(ErrorKind::InvalidArgument, "x").is_numerical());
  EXPECT_EQ(to_string(ErrorKind::QuadratureUnderResolved), "QuadratureUnderResolved");
}

TEST(Shell, GeometryInvariants) {
  const ShellGeometry geom(0.1, 2.0);
  EXPECT_DOUBLE_EQ(geom.inner_radius(), 0.95);
  EXPECT_TRUE(geom.contains_radius(1.05));
  EXPECT_FALSE(geom.contains_radius(1.06));
  EXPECT_THROW(geom.require_radius(0.9), Error);
  EXPECT_THROW(ShellGeometry(0.0, 1.0), Error);
  EXPECT_THROW(ShellGeometry(1.0, 1.0), Error);
  EXPECT_THROW(ShellGeometry(0.1, -1.0), Error);
  EXPECT_THROW(WaveNumbers(0, 1, 1.0), Error);
  EXPECT_THROW(WaveNumbers(1, -1, 1.0), Error);
  EXPECT_DOUBLE_EQ(WaveNumbers(3, 0, 2.0).m_hat(), 1.5 * std::acos(-1.0));
}

}  // namespace
}  // namespace koiter
