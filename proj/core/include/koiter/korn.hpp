#pragma once

#include <string_view>
#include <vector>

#include "koiter/critical_load.hpp"
#include "koiter/oracle.hpp"

namespace koiter {

/// \brief Which Korn-type inequality an estimate measures.
enum class KornKind {
  KornConstant,  ///< min ||e||^2 / ||grad phi||^2 (upper-bound estimator of K(V_h))
  AngularShear,  ///< max ||phi_theta,z||^2 / ||e||^2
  RadialShear,   ///< max ||phi_r,z||^2 / ||e||^2
  WeightedKorn,  ///< max ||grad phi||^2 / ((||phi_r||/h + ||e||) ||e||) on Korn-extremal fields
};

std::string_view to_string(KornKind kind) noexcept;

/// \brief Measured constant of one inequality at one thickness, with the extremal mode.
struct KornEstimate {
  double h = 0.0;
  KornKind kind = KornKind::KornConstant;
  double value = 0.0;
  int m = 0;
  int n = 0;
};

/// \brief Extremal Korn ratios of a single discretized Fourier mode.
struct ModeKornRatios {
  double korn = 0.0;
  double angular_shear = 0.0;
  double radial_shear = 0.0;
  double weighted = 0.0;
};

/// \brief Eigen-extremal Korn ratios of one mode (angular_shear is 0 for n = 0).
ModeKornRatios korn_ratios(const ShellGeometry& geom, const WaveNumbers& wn, const RadialDiscretization& disc);

/**
 * \brief Aggregates the per-mode ratios over the window: the minimum for the Korn constant,
 * the maximum for the three upper-bound inequalities. Ordered as the KornKind enumerators.
 */
std::vector<KornEstimate> korn_mode_scan(const ShellGeometry& geom, const RadialDiscretization& disc,
                                         const SweepWindow& window, unsigned jobs = 0);

/// \brief Equivalence gaps of one mode, as eigen-extremal values of difference pencils over the stiffness.
struct EquivalenceGap {
  double compression_gap = 0.0;      ///< sup (1/R - 1/R1)
  double compression_gap_min = 0.0;  ///< inf (1/R - 1/R1), nonnegative up to round-off
  double midsurface_gap = 0.0;       ///< sup |1/R1 - 1/R2|
};

EquivalenceGap equivalence_gap(const ShellGeometry& geom, const IsotropicElasticity& elastic, const WaveNumbers& wn,
                               const RadialDiscretization& disc);

/// \brief Window suprema of the equivalence gaps.
struct WindowEquivalenceGap {
  double compression_gap = 0.0;
  double compression_gap_min = 0.0;
  double midsurface_gap = 0.0;
  /// sup over the window of |1/R1 - 1/R2| / (m_hat sqrt(h))
  double midsurface_constant = 0.0;
};

WindowEquivalenceGap equivalence_window_gap(const ShellGeometry& geom, const IsotropicElasticity& elastic,
                                            const SweepWindow& window, const RadialDiscretization& disc,
                                            unsigned jobs = 0);

}  // namespace koiter
