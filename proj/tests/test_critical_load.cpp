#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "koiter/critical_load.hpp"
#include "koiter/errors.hpp"

namespace koiter {
namespace {

constexpr double kPi = std::numbers::pi;

CriticalLoadProblem problem_at(double h, double nu = 0.3) {
  return CriticalLoadProblem(ShellGeometry(h, kPi), IsotropicElasticity::from_poisson(nu));
}

struct GridMinimum {
  double value;
  double x;
  double y;
};

/// Brute-force minimum over [-10, 10]^2: a 2001^2 grid, then three zoomed 201^2 grids around the best node.
GridMinimum grid_minimum(const std::function<double(double, double)>& f, bool fix_x = false) {
  GridMinimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  double cx = 0.0, cy = 0.0, half = 10.0;
  int points = 2001;
  for (int level = 0; level < 4; ++level) {
    const double step = 2.0 * half / (points - 1);
    for (int i = 0; i < points; ++i) {
      const double x = fix_x ? 0.0 : cx - half + i * step;
      for (int j = 0; j < points; ++j) {
        const double y = cy - half + j * step;
        const double v = f(x, y);
        if (v < best.value) best = {v, x, y};
      }
      if (fix_x) break;
    }
    cx = best.x;
    cy = best.y;
    half = 2.0 * step;
    points = 201;
  }
  return best;
}

TEST(CriticalLoad, QuadraticFormsAtZeroAmplitude) {
  const auto elastic = IsotropicElasticity::from_poisson(0.3);
  for (double m_hat : {1.0, 2.5}) {
    for (int n : {0, 3}) {
      EXPECT_NEAR(q_forms(m_hat, n, 0.0, 0.0, elastic).q0, 6.0 / 7.0 + 2.0, 1e-14);
    }
    // (2 Lambda / (Lambda + 2) + 2) m_hat^4 with Lambda / (Lambda + 2) = 3/7
    EXPECT_NEAR(q_forms(m_hat, 0, 0.0, 0.0, elastic).q1_simplified, (6.0 / 7.0 + 2.0) * std::pow(m_hat, 4), 1e-12);
  }
  EXPECT_EQ(q_forms(1.7, 4, -4.0, 0.3, elastic).q2, 0.0);
  EXPECT_NEAR(q_forms(1.7, 4, -3.0, 0.3, elastic).q2, 1.7 * 1.7, 1e-14);
}

TEST(CriticalLoad, FormsAreNonnegative) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-5.0, 5.0), m(0.2, 30.0), nu(-0.9, 0.49);
  std::uniform_int_distribution<int> n(0, 30);
  for (int i = 0; i < 500; ++i) {
    const auto q = q_forms(m(rng), n(rng), u(rng), u(rng), IsotropicElasticity::from_poisson(nu(rng)));
    EXPECT_GE(q.q0, 0.0);
    EXPECT_GE(q.q1_simplified, 0.0);
    EXPECT_GE(q.q2, 0.0);
  }
}

TEST(CriticalLoad, AxialAmplitudeClosedForm) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5.0, 5.0), m(0.2, 30.0), nu(-0.9, 0.49);
  std::uniform_int_distribution<int> n(0, 30);
  for (int i = 0; i < 200; ++i) {
    const auto elastic = IsotropicElasticity::from_poisson(nu(rng));
    const double m_hat = m(rng), a_theta = u(rng);
    const int nn = n(rng);
    const double expected =
        -m_hat * (2 * elastic.poisson_ratio() + (elastic.poisson_ratio() + 1) * nn * a_theta) /
        (2 * m_hat * m_hat + (1 - elastic.poisson_ratio()) * nn * nn);
    EXPECT_NEAR(axial_amplitude_formula(m_hat, nn, a_theta, elastic.poisson_ratio()), expected, 1e-14);
    EXPECT_NEAR(minimize_q0_axial(m_hat, nn, a_theta, elastic).a_z, expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(CriticalLoad, ExactSolveMatchesGridSearch) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_h(std::log(1e-3), std::log(0.1)), nu(0.0, 0.45);
  for (int k = 0; k < 5; ++k) {
    const auto problem = problem_at(std::exp(log_h(rng)), nu(rng));
    std::uniform_int_distribution<int> m(1, 4), n(0, 8);
    const auto wn = problem.wave_numbers(m(rng), n(rng));
    const auto exact = lambda3_full(problem, wn);
    const auto grid = grid_minimum(
        [&](double at, double az) { return lambda3_objective(problem, wn, at, az); }, wn.n() == 0);
    EXPECT_NEAR(grid.value / exact.value, 1.0, 1e-9);
    EXPECT_NEAR(grid.x, exact.a_theta, 1e-6);
    EXPECT_NEAR(grid.y, exact.a_z, 1e-6);
    EXPECT_LT(lambda3_gradient_norm(problem, wn, exact.a_theta, exact.a_z), 1e-10);
  }
}

TEST(CriticalLoad, VanishingThicknessKeepsMembraneTerm) {
  const auto problem = problem_at(1e-8);
  const auto wn = problem.wave_numbers(2, 5);
  const double scale = 2.0 * 1.3 * wn.m_hat() * wn.m_hat();
  const auto membrane = grid_minimum([&](double at, double az) {
    return q_forms(wn, at, az, problem.elasticity()).q0 / scale;
  });
  EXPECT_NEAR(lambda3_tilde(problem, wn).value, membrane.value, 1e-9);
}

TEST(CriticalLoad, SandwichBetweenReducedLoads) {
  for (double h : {0.1, 0.01, 0.001}) {
    const auto problem = problem_at(h);
    for (auto [m, n] : {std::pair{1, 0}, {1, 3}, {4, 7}, {9, 2}}) {
      const auto wn = problem.wave_numbers(m, n);
      const double tilde = lambda3_tilde(problem, wn).value;
      const double full = lambda3_full(problem, wn).value;
      EXPECT_GE(full, (1 - h - h * h) * tilde);
      EXPECT_LE(full, (1 + h + h * h) * tilde);
    }
  }
}

TEST(CriticalLoad, ClassicalLoad) {
  EXPECT_NEAR(lambda_star(0.01, 0.3), 0.01 / std::sqrt(2.73), 1e-18);
  EXPECT_NEAR(lambda_star(0.01, 0.3), 6.0523e-3, 5e-8);
  EXPECT_DOUBLE_EQ(lambda_star(0.01, 0.0), 0.01 / std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(lambda_star(0.02, 0.3), 2.0 * lambda_star(0.01, 0.3));
}

TEST(CriticalLoad, SweepWinnerAtOnePercent) {
  const auto problem = problem_at(0.01);
  const auto r = sweep(problem, 1);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.n, 4);
  EXPECT_NEAR(r.lambda / r.lambda_star, 0.9564154898906579, 1e-9);
  EXPECT_NEAR(r.koiter_residual, std::abs(1.0 / 17.0 - std::sqrt(r.lambda / 2.0)), 1e-15);
  EXPECT_LT(r.koiter_residual, 0.01);
  EXPECT_GT(r.lambda, 0.0);
}

TEST(CriticalLoad, SweepConvergesToClassicalLoad) {
  std::vector<double> deviation;
  for (double h : {0.1, 0.03, 0.01, 0.003, 0.001}) {
    const auto r = sweep(problem_at(h), 1);
    deviation.push_back(std::abs(r.lambda / r.lambda_star - 1.0));
  }
  for (std::size_t i = 1; i < deviation.size(); ++i) EXPECT_LT(deviation[i], deviation[i - 1]);
}

TEST(CriticalLoad, ThickShellStillHasFiniteWinner) {
  const auto r = sweep(problem_at(0.5), 1);
  EXPECT_EQ(r.m, 2);
  EXPECT_EQ(r.n, 1);
  EXPECT_TRUE(std::isfinite(r.lambda));
}

TEST(CriticalLoad, SweepIsIndependentOfThreadCount) {
  const auto problem = problem_at(0.003);
  const auto a = sweep(problem, 1);
  const auto b = sweep(problem, 4);
  EXPECT_EQ(a.m, b.m);
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.lambda, b.lambda);
}

TEST(CriticalLoad, TableOrderIsNMajor) {
  const CriticalLoadProblem problem(ShellGeometry(0.01, kPi), IsotropicElasticity::from_poisson(0.3),
                                    SweepWindow{3, 2});
  const auto table = sweep_table(problem, 1);
  ASSERT_EQ(table.size(), 9u);
  EXPECT_EQ(table[1].m, 2);
  EXPECT_EQ(table[1].n, 0);
  EXPECT_EQ(table[3].m, 1);
  EXPECT_EQ(table[3].n, 1);
}

TEST(CriticalLoad, SmallWindowIsReported) {
  const CriticalLoadProblem problem(ShellGeometry(0.001, kPi), IsotropicElasticity::from_poisson(0.3),
                                    SweepWindow{2, 1});
  try {
    (void)sweep(problem, 1);
    FAIL() << "expected WindowTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowTooSmall);
  }
}

TEST(CriticalLoad, KoiterCircleGeometry) {
  const auto problem = problem_at(0.01);
  const double R = problem.koiter_radius();
  // Axisymmetric point of the circle: m_hat = 2R = sqrt(2 / lambda*).
  EXPECT_NEAR(2.0 * R, std::sqrt(2.0 / lambda_star(problem)), 1e-12);
  EXPECT_NEAR(2.0 * R, 18.178, 5e-4);
  EXPECT_NEAR(circle_distance(problem, 2.0 * R, 0.0), 0.0, 1e-12);
  EXPECT_NEAR(circle_distance(problem, R, R), 0.0, 1e-12);
  // Doubling lambda* shrinks the radius by sqrt(2).
  EXPECT_NEAR(problem_at(0.02).koiter_radius() * std::sqrt(2.0), R, 1e-12);
}

TEST(CriticalLoad, KoiterCirclePairsAreNearCritical) {
  const auto problem = problem_at(0.001);
  const double critical = sweep(problem, 1).lambda;
  const double tol = 0.02;
  const auto points = koiter_circle(problem, tol);
  ASSERT_GE(points.size(), 5u);
  for (std::size_t i = 0; i < points.size(); ++i) {
    EXPECT_LE(points[i].residual, tol);
    if (i > 0) EXPECT_LE(points[i - 1].residual, points[i].residual);
    // Near the origin, where the circle degenerates, a small relative distance does not bound the load.
    if (std::hypot(points[i].wn.m_hat(), points[i].wn.n()) < 0.5 * problem.koiter_radius()) continue;
    EXPECT_LE(lambda3_tilde(problem, points[i].wn).value / critical, 1.0 + 4.0 * tol);
  }
}

TEST(CriticalLoad, EmptyCircleIsReported) {
  try {
    (void)koiter_circle(problem_at(0.3), 1e-9);
    FAIL() << "expected EmptySet";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySet);
  }
}

}  // namespace
}  // namespace koiter
