#include "koiter/shell.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "koiter/errors.hpp"

namespace koiter {

ShellGeometry::ShellGeometry(double thickness, double length) : h_(thickness), L_(length) {
  require(std::isfinite(h_) && h_ > 0.0 && h_ < 1.0, "thickness h must satisfy 0 < h < 1");
  require(std::isfinite(L_) && L_ > 0.0, "length L must be positive");
}

bool ShellGeometry::contains_radius(double r) const {
  const double slack = 8.0 * std::numeric_limits<double>::epsilon();
  return r >= inner_radius() - slack && r <= outer_radius() + slack;
}

void ShellGeometry::require_radius(double r) const {
  require(contains_radius(r), "radius " + std::to_string(r) + " lies outside the thickness interval");
}

WaveNumbers::WaveNumbers(int m, int n, double length) : m_(m), n_(n), L_(length) {
  require(m_ >= 1, "axial wave number m must be >= 1");
  require(n_ >= 0, "circumferential wave number n must be >= 0");
  require(std::isfinite(L_) && L_ > 0.0, "length L must be positive");
  m_hat_ = std::numbers::pi * m_ / L_;
}

AngularWeights AngularWeights::of(const WaveNumbers& wn) {
  const double axial = 0.5 * wn.length();
  const double cos_theta = wn.n() == 0 ? 2.0 * std::numbers::pi : std::numbers::pi;
  const double sin_theta = wn.n() == 0 ? 0.0 : std::numbers::pi;
  return {cos_theta * axial, sin_theta * axial, cos_theta * axial, sin_theta * axial};
}

}  // namespace koiter
