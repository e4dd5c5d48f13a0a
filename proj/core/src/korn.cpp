#include "koiter/korn.hpp"

#include <algorithm>
#include <cmath>

#include "koiter/errors.hpp"
#include "koiter/parallel.hpp"

namespace koiter {

std::string_view to_string(KornKind kind) noexcept {
  switch (kind) {
    case KornKind::KornConstant: return "korn";
    case KornKind::AngularShear: return "theta_z";
    case KornKind::RadialShear: return "r_z";
    case KornKind::WeightedKorn: return "weighted";
  }
  return "unknown";
}

ModeKornRatios korn_ratios(const ShellGeometry& geom, const WaveNumbers& wn, const RadialDiscretization& disc) {
  // The strain and gradient norms do not involve the material; any valid elasticity works.
  const auto unit = IsotropicElasticity::from_poisson(0.0);
  const ModeBasis basis(geom, wn, ModeSpace::General, disc);
  const PencilFactorization strain(assemble_form(FormKind::StrainNorm, basis, unit));

  ModeKornRatios out;
  const auto gradient = strain.spectrum(assemble_form(FormKind::GradientNorm, basis, unit));
  const Eigen::Index top = gradient.values.size() - 1;
  const double grad_max = gradient.values(top);
  out.korn = 1.0 / grad_max;
  // The extremal field has ||e|| = 1 and ||grad phi||^2 = grad_max.
  const Eigen::VectorXd x = gradient.vectors.col(top);
  const double radial_norm = std::sqrt(x.dot(assemble_form(FormKind::RadialNorm, basis, unit) * x));
  out.weighted = grad_max / (radial_norm / geom.thickness() + 1.0);

  out.radial_shear = strain.eigenvalues(assemble_form(FormKind::RadialShear, basis, unit)).maxCoeff();
  if (wn.n() > 0) out.angular_shear = strain.eigenvalues(assemble_form(FormKind::AngularShear, basis, unit)).maxCoeff();
  return out;
}

std::vector<KornEstimate> korn_mode_scan(const ShellGeometry& geom, const RadialDiscretization& disc,
                                         const SweepWindow& window, unsigned jobs) {
  require(window.max_m >= 1 && window.max_n >= 0, "window must contain at least one mode");
  const auto per_n = static_cast<std::size_t>(window.max_m);
  std::vector<ModeKornRatios> ratios(per_n * static_cast<std::size_t>(window.max_n + 1));
  parallel_for(ratios.size(), jobs, [&](std::size_t i) {
    const int n = static_cast<int>(i / per_n);
    const int m = static_cast<int>(i % per_n) + 1;
    ratios[i] = korn_ratios(geom, WaveNumbers(m, n, geom.length()), disc);
  });

  std::vector<KornEstimate> out = {{geom.thickness(), KornKind::KornConstant, 0.0, 0, 0},
                                   {geom.thickness(), KornKind::AngularShear, 0.0, 0, 0},
                                   {geom.thickness(), KornKind::RadialShear, 0.0, 0, 0},
                                   {geom.thickness(), KornKind::WeightedKorn, 0.0, 0, 0}};
  auto update = [](KornEstimate& e, double value, bool minimum, int m, int n) {
    const bool first = e.m == 0;
    if (first || (minimum ? value < e.value : value > e.value)) {
      e.value = value;
      e.m = m;
      e.n = n;
    }
  };
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const int n = static_cast<int>(i / per_n);
    const int m = static_cast<int>(i % per_n) + 1;
    update(out[0], ratios[i].korn, true, m, n);
    if (n > 0) update(out[1], ratios[i].angular_shear, false, m, n);
    update(out[2], ratios[i].radial_shear, false, m, n);
    update(out[3], ratios[i].weighted, false, m, n);
  }
  return out;
}

EquivalenceGap equivalence_gap(const ShellGeometry& geom, const IsotropicElasticity& elastic, const WaveNumbers& wn,
                               const RadialDiscretization& disc) {
  const ModeBasis basis(geom, wn, ModeSpace::General, disc);
  const PencilFactorization stiffness(assemble_form(FormKind::Stiffness, basis, elastic));
  const Eigen::MatrixXd radial = assemble_form(FormKind::RadialShear, basis, elastic);
  // 1/R - 1/R1 = (c(phi) - ||phi_r,z||^2) / S(phi) and 1/R1 - 1/R2 = (||phi_r,z||^2 - ||phi_r,z(1)||^2) / S(phi).
  const Eigen::VectorXd compression =
      stiffness.eigenvalues(assemble_form(FormKind::Compression, basis, elastic) - radial);
  const Eigen::VectorXd midsurface =
      stiffness.eigenvalues(radial - assemble_form(FormKind::MidsurfaceRadialShear, basis, elastic));
  EquivalenceGap out;
  out.compression_gap = compression.maxCoeff();
  out.compression_gap_min = compression.minCoeff();
  out.midsurface_gap = midsurface.cwiseAbs().maxCoeff();
  return out;
}

WindowEquivalenceGap equivalence_window_gap(const ShellGeometry& geom, const IsotropicElasticity& elastic,
                                            const SweepWindow& window, const RadialDiscretization& disc,
                                            unsigned jobs) {
  require(window.max_m >= 1 && window.max_n >= 0, "window must contain at least one mode");
  const auto per_n = static_cast<std::size_t>(window.max_m);
  std::vector<EquivalenceGap> gaps(per_n * static_cast<std::size_t>(window.max_n + 1));
  parallel_for(gaps.size(), jobs, [&](std::size_t i) {
    const int n = static_cast<int>(i / per_n);
    const int m = static_cast<int>(i % per_n) + 1;
    gaps[i] = equivalence_gap(geom, elastic, WaveNumbers(m, n, geom.length()), disc);
  });
  WindowEquivalenceGap out;
  out.compression_gap_min = gaps.front().compression_gap_min;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const int m = static_cast<int>(i % per_n) + 1;
    const double m_hat = WaveNumbers(m, 0, geom.length()).m_hat();
    out.compression_gap = std::max(out.compression_gap, gaps[i].compression_gap);
    out.compression_gap_min = std::min(out.compression_gap_min, gaps[i].compression_gap_min);
    out.midsurface_gap = std::max(out.midsurface_gap, gaps[i].midsurface_gap);
    out.midsurface_constant =
        std::max(out.midsurface_constant, gaps[i].midsurface_gap / (m_hat * std::sqrt(geom.thickness())));
  }
  return out;
}

}  // namespace koiter
