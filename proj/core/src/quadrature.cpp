#include "koiter/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "koiter/errors.hpp"

namespace koiter {

namespace {

// Legendre polynomial P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int count, double lower, double upper) {
  require(count >= 1, "quadrature needs at least one node");
  require(lower < upper, "quadrature interval must be nonempty");
  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  if (count == 1) {
    rule.nodes[0] = 0.5 * (lower + upper);
    rule.weights[0] = upper - lower;
    return rule;
  }
  const double half = 0.5 * (upper - lower);
  const double mid = 0.5 * (upper + lower);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    // Tricomi initial guess followed by Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const auto [p, d] = legendre(count, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    dp = legendre(count, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Nodes in ascending order: x_i is the i-th largest root.
    rule.nodes[count - 1 - i] = mid + half * x;
    rule.nodes[i] = mid - half * x;
    rule.weights[count - 1 - i] = half * w;
    rule.weights[i] = half * w;
  }
  return rule;
}

}  // namespace koiter
