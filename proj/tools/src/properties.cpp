#include "koiter/tools/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "koiter/critical_load.hpp"
#include "koiter/material.hpp"
#include "koiter/quadrature.hpp"
#include "koiter/spectral_reduction.hpp"
#include "koiter/tools/output.hpp"

namespace koiter::tools {

namespace {

SymStrain random_strain(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymStrain e;
  e.rr = u(rng);
  e.tt = u(rng);
  e.zz = u(rng);
  e.rt = u(rng);
  e.rz = u(rng);
  e.tz = u(rng);
  return e;
}

Polynomial random_polynomial(std::mt19937_64& rng, int degree, double h) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  // Scale the coefficients so every monomial is O(1) on |s| <= h/2.
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = u(rng) * std::pow(2.0 / h, static_cast<double>(k));
  return Polynomial(std::move(c));
}

PropertyReport finish(PropertyReport report, bool passed, const std::string& what) {
  report.passed = passed;
  std::ostringstream out;
  out << what << " over " << report.samples << " samples, worst " << format_double(report.worst);
  report.detail = out.str();
  return report;
}

}  // namespace

PropertyReport check_homogeneity(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> nu_dist(-0.99, 0.49);
  std::uniform_real_distribution<double> c_dist(-10.0, 10.0);
  PropertyReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const auto elastic = IsotropicElasticity::from_poisson(nu_dist(rng));
    const SymStrain e = random_strain(rng);
    const double c = c_dist(rng);
    const double base = energy_density(elastic, e);
    const double scaled = energy_density(elastic, c * e);
    const double error = std::abs(scaled - c * c * base) / std::max(c * c * base, 1e-300);
    report.worst = std::max(report.worst, error);
  }
  return finish(report, report.worst <= 1e-12, "relative homogeneity error");
}

PropertyReport check_coercivity(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> nu_dist(-0.99, 0.49);
  PropertyReport report;
  report.samples = samples;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const auto elastic = IsotropicElasticity::from_poisson(nu_dist(rng));
    const SymStrain e = random_strain(rng);
    const double bound = coercivity_bound(elastic) * e.frobenius_sq();
    // Relative margin (density - bound) / bound; must not drop below -1e-12.
    worst_margin = std::min(worst_margin, (energy_density(elastic, e) - bound) / bound);
  }
  report.worst = worst_margin;
  return finish(report, worst_margin >= -1e-12, "smallest relative coercivity margin");
}

PropertyReport check_parseval(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> h_dist(0.01, 0.3);
  std::uniform_real_distribution<double> L_dist(1.0, 5.0);
  std::uniform_real_distribution<double> nu_dist(-0.5, 0.45);
  std::uniform_int_distribution<int> m_dist(1, 6);
  std::uniform_int_distribution<int> n_dist(0, 6);
  PropertyReport report;
  report.samples = trials;
  for (int t = 0; t < trials; ++t) {
    const ShellGeometry geom(h_dist(rng), L_dist(rng));
    const auto elastic = IsotropicElasticity::from_poisson(nu_dist(rng));
    std::set<std::pair<int, int>> used;
    std::vector<FourierMode> modes;
    while (modes.size() < 3) {
      const int m = m_dist(rng);
      const int n = n_dist(rng);
      if (!used.insert({m, n}).second) continue;
      const double h = geom.thickness();
      modes.push_back({WaveNumbers(m, n, geom.length()), random_polynomial(rng, 3, h), random_polynomial(rng, 3, h),
                       random_polynomial(rng, 3, h)});
    }

    const auto radial = gauss_legendre(12, geom.inner_radius(), geom.outer_radius());
    const auto axial = gauss_legendre(64, 0.0, geom.length());
    const int theta_nodes = 64;
    const double dtheta = 2.0 * std::numbers::pi / theta_nodes;

    double separate = 0.0;
    for (const auto& mode : modes) {
      const auto weights = AngularWeights::of(mode.wn);
      for (std::size_t q = 0; q < radial.size(); ++q) {
        const double r = radial.nodes[q];
        separate += radial.weights[q] * r * weighted_energy(elastic, mode_strain(mode, geom, r), weights);
      }
    }

    double combined = 0.0;
    for (std::size_t q = 0; q < radial.size(); ++q) {
      const double r = radial.nodes[q];
      std::vector<SymStrain> amplitudes;
      for (const auto& mode : modes) amplitudes.push_back(mode_strain(mode, geom, r));
      for (int j = 0; j < theta_nodes; ++j) {
        const double theta = j * dtheta;
        for (std::size_t k = 0; k < axial.size(); ++k) {
          const double z = axial.nodes[k];
          SymStrain e;
          for (std::size_t i = 0; i < modes.size(); ++i) {
            const double n = modes[i].wn.n();
            const double mh = modes[i].wn.m_hat();
            const double ct = std::cos(n * theta), st = std::sin(n * theta);
            const double cz = std::cos(mh * z), sz = std::sin(mh * z);
            const SymStrain& a = amplitudes[i];
            e.rr += a.rr * ct * cz;
            e.tt += a.tt * ct * cz;
            e.zz += a.zz * ct * cz;
            e.rt += a.rt * st * cz;
            e.rz += a.rz * ct * sz;
            e.tz += a.tz * st * sz;
          }
          combined += radial.weights[q] * r * dtheta * axial.weights[k] * energy_density(elastic, e);
        }
      }
    }
    report.worst = std::max(report.worst, std::abs(combined - separate) / separate);
  }
  return finish(report, report.worst <= 1e-10, "relative cross-mode energy");
}

PropertyReport check_integral_inequality(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> h_dist(1e-3, 0.5);
  std::uniform_int_distribution<int> degree_dist(0, 8);
  PropertyReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const double h = h_dist(rng);
    const ShellGeometry geom(h, 1.0);
    const Polynomial f = random_polynomial(rng, degree_dist(rng), h);
    const Polynomial F = f.antiderivative();
    const auto rule = gauss_legendre(16, geom.inner_radius(), geom.outer_radius());
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double s = rule.nodes[q] - 1.0;
      lhs += rule.weights[q] * F(s) * F(s);
      rhs += rule.weights[q] * f(s) * f(s);
    }
    rhs *= 0.25 * h * h;
    report.worst = std::max(report.worst, lhs / rhs);
  }
  return finish(report, report.worst <= 1.0 + 1e-12, "largest ratio lhs/rhs");
}

PropertyReport check_sandwich(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_h(std::log(1e-3), std::log(0.1));
  std::uniform_real_distribution<double> nu_dist(0.0, 0.49);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PropertyReport report;
  report.samples = samples;
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    const double h = std::exp(log_h(rng));
    const CriticalLoadProblem problem(ShellGeometry(h, std::numbers::pi), IsotropicElasticity::from_poisson(nu_dist(rng)));
    // Wave numbers drawn from the sweep window, where the wave-number bounds hold.
    const auto& w = problem.window();
    const int m = 1 + static_cast<int>(unit(rng) * w.max_m) % w.max_m;
    const int n = static_cast<int>(unit(rng) * (w.max_n + 1)) % (w.max_n + 1);
    const auto wn = problem.wave_numbers(m, n);
    const double tilde = lambda3_tilde(problem, wn).value;
    const double full = lambda3_full(problem, wn).value;
    const double slack = h + h * h;
    const double excess = std::max((1.0 - slack) * tilde - full, full - (1.0 + slack) * tilde) / tilde;
    if (excess > 0.0) ++violations;
    // Normalized position of full/tilde - 1 inside the band [-(h+h^2), h+h^2].
    report.worst = std::max(report.worst, std::abs(full / tilde - 1.0) / slack);
  }
  return finish(report, violations == 0, "largest |lambda3/lambda3_tilde - 1| / (h+h^2)");
}

}  // namespace koiter::tools
