#include "koiter/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "koiter/errors.hpp"
#include "koiter/quadrature.hpp"

namespace koiter {

SmoothBump::SmoothBump(double sharpness) : c_(sharpness) {
  require(std::isfinite(sharpness) && sharpness > 0.0, "bump sharpness must be positive");
}

std::array<double, SmoothBump::kMaxOrder + 1> SmoothBump::derivatives(double x) const {
  std::array<double, kMaxOrder + 1> b{};
  if (!(std::abs(x) < 1.0)) return b;
  b[0] = std::exp(c_ - c_ / (1.0 - x * x));
  if (b[0] == 0.0) return b;
  // g = log b = c - c/2 (1/(1-x) + 1/(1+x)); g^(j) = -c/2 j! ((1-x)^-(j+1) + (-1)^j (1+x)^-(j+1)).
  std::array<double, kMaxOrder + 1> g{};
  double factorial = 1.0;
  for (int j = 1; j <= kMaxOrder; ++j) {
    factorial *= j;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    g[j] = -0.5 * c_ * factorial * (std::pow(1.0 - x, -(j + 1)) + sign * std::pow(1.0 + x, -(j + 1)));
  }
  // Faa di Bruno through b' = g' b: b^(k+1) = sum_j C(k, j) g^(j+1) b^(k-j).
  for (int k = 0; k < kMaxOrder; ++k) {
    double binomial = 1.0;
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) {
      sum += binomial * g[j + 1] * b[k - j];
      binomial = binomial * (k - j) / (j + 1);
    }
    b[k + 1] = sum;
  }
  return b;
}

AnsatzRatios ansatz_ratios(const ShellGeometry& geom, const BumpProfile& bump, const AnsatzQuadrature& quad) {
  require(bump.amplitude != 0.0 && std::isfinite(bump.amplitude), "ansatz generating function must be nonzero");
  require(quad.radial_nodes >= 1 && quad.axial_nodes >= 8, "ansatz quadrature is too coarse");
  require(quad.support_nodes >= 1 && quad.min_support_nodes >= 1, "ansatz support resolution must be positive");
  const double h = geom.thickness();
  const double L = geom.length();
  const double eps = std::pow(h, 0.25);
  const double pi = std::numbers::pi;

  // Uniform periodic theta grid; the support |theta| < eps holds about N eps / pi nodes.
  const int theta_nodes =
      quad.theta_nodes > 0 ? quad.theta_nodes : static_cast<int>(std::ceil(quad.support_nodes * pi / eps));
  const double dtheta = 2.0 * pi / theta_nodes;
  std::vector<std::array<double, SmoothBump::kMaxOrder + 1>> eta;
  for (int j = -theta_nodes / 2; j <= theta_nodes / 2; ++j) {
    const double theta = j * dtheta;
    if (std::abs(theta) >= eps || std::abs(theta) > pi) continue;
    eta.push_back(bump.eta_bump.derivatives(theta / eps));
  }
  if (static_cast<int>(eta.size()) < quad.min_support_nodes) {
    throw Error(ErrorKind::QuadratureUnderResolved,
                "theta grid places " + std::to_string(eta.size()) + " nodes in the compressed support");
  }

  // Uniform z grid; every derivative of W vanishes at z = 0 and z = L.
  const double dz = L / quad.axial_nodes;
  std::vector<std::array<double, 3>> axial;
  for (int k = 1; k < quad.axial_nodes; ++k) {
    const auto b = bump.axial_bump.derivatives(2.0 * k * dz / L - 1.0);
    const double s = 2.0 / L;
    axial.push_back({b[0], s * b[1], s * s * b[2]});
  }

  const auto radial = gauss_legendre(quad.radial_nodes, geom.inner_radius(), geom.outer_radius());
  double strain = 0.0, gradient = 0.0, theta_z = 0.0, r_z = 0.0;
  for (std::size_t q = 0; q < radial.size(); ++q) {
    const double r = radial.nodes[q];
    const double s = r - 1.0;
    const double weight_r = radial.weights[q] * r * dtheta * dz * bump.amplitude * bump.amplitude;
    for (const auto& e : eta) {
      for (const auto& a : axial) {
        // W_{eta^i z^k} = e[i] * a[k].
        auto W = [&](int i, int k) { return e[i] * a[k]; };
        const double phi_r = -W(2, 0);
        const double phi_t = r * eps * W(1, 0) + s * W(3, 0) / eps;
        // Derivatives in (r, theta, z); d/dtheta = (1/eps) d/deta.
        const double r_r = 0.0;
        const double r_t = -W(3, 0) / eps;
        const double r_z_ = -W(2, 1);
        const double t_r = eps * W(1, 0) + W(3, 0) / eps;
        const double t_t = r * W(2, 0) + s * W(4, 0) / (eps * eps);
        const double t_z = r * eps * W(1, 1) + s * W(3, 1) / eps;
        const double z_r = W(2, 1);
        const double z_t = (s * W(3, 1) - eps * eps * W(1, 1)) / eps;
        const double z_z = s * W(2, 2) - eps * eps * W(0, 2);
        // Orthonormal-frame gradient.
        const double g_rr = r_r, g_rt = (r_t - phi_t) / r, g_rz = r_z_;
        const double g_tr = t_r, g_tt = (t_t + phi_r) / r, g_tz = t_z;
        const double g_zr = z_r, g_zt = z_t / r, g_zz = z_z;
        const double grad_sq = g_rr * g_rr + g_rt * g_rt + g_rz * g_rz + g_tr * g_tr + g_tt * g_tt + g_tz * g_tz +
                               g_zr * g_zr + g_zt * g_zt + g_zz * g_zz;
        const double e_rt = 0.5 * (g_rt + g_tr);
        const double e_rz = 0.5 * (g_rz + g_zr);
        const double e_tz = 0.5 * (g_tz + g_zt);
        const double strain_sq =
            g_rr * g_rr + g_tt * g_tt + g_zz * g_zz + 2.0 * (e_rt * e_rt + e_rz * e_rz + e_tz * e_tz);
        gradient += weight_r * grad_sq;
        strain += weight_r * strain_sq;
        theta_z += weight_r * g_tz * g_tz;
        r_z += weight_r * g_rz * g_rz;
      }
    }
  }
  require(gradient > 0.0 && strain > 0.0, "ansatz field vanishes on the quadrature grid");
  return {strain / gradient, theta_z / strain, r_z / strain};
}

}  // namespace koiter
