#pragma once

#include <vector>

namespace koiter {

/// \brief Nodes and weights of a one-dimensional quadrature rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/**
 * \brief Gauss-Legendre rule with `count` nodes on [lower, upper].
 *
 * Exact for polynomials of degree <= 2 count - 1.
 */
QuadratureRule gauss_legendre(int count, double lower = -1.0, double upper = 1.0);

}  // namespace koiter
