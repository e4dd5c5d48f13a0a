#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "koiter/critical_load.hpp"
#include "koiter/errors.hpp"
#include "koiter/oracle.hpp"
#include "koiter/spectral_reduction.hpp"

namespace koiter {
namespace {

constexpr double kPi = std::numbers::pi;
const IsotropicElasticity kSteel = IsotropicElasticity::from_poisson(0.3);

TEST(Oracle, StiffnessIsPositiveDefiniteWithoutRigidModes) {
  for (double h : {0.1, 0.01, 0.001}) {
    const ShellGeometry geom(h, kPi);
    const ModeBasis basis(geom, WaveNumbers(1, 0, kPi), ModeSpace::General, {});
    const Eigen::MatrixXd a = assemble_form(FormKind::Stiffness, basis, kSteel);
    const Eigen::VectorXd d = a.diagonal().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd scaled = d.asDiagonal() * a * d.asDiagonal();
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(scaled).eigenvalues().minCoeff(), 0.0) << h;
  }
}

TEST(Oracle, FormsAgreeWithClosedFormIntegrands) {
  const ShellGeometry geom(0.02, kPi);
  for (auto [m, n] : {std::pair{1, 0}, {3, 7}}) {
    const auto mode = LinearizedMode::with_optimal_profile(WaveNumbers(m, n, kPi), -0.1, 0.05, kSteel);
    const ModeBasis basis(geom, {mode.to_fourier()}, 32);
    const double assembled = assemble_form(FormKind::Stiffness, basis, kSteel)(0, 0);
    EXPECT_NEAR(assembled / mode_energy(mode, geom, kSteel, StrainModel::Exact), 1.0, 1e-12);
    const double simplified = assemble_form(FormKind::SimplifiedStiffness, basis, kSteel)(0, 0);
    EXPECT_NEAR(simplified / mode_energy(mode, geom, kSteel, StrainModel::Simplified), 1.0, 1e-12);
  }
}

TEST(Oracle, CompressionOfAnalyticMode) {
  // phi_r = cos(m_hat z) only: ||phi_r,z||^2 = m_hat^2 * (2 pi L / 2) * h, the other terms vanish.
  const double h = 0.04, L = 2.0;
  const ShellGeometry geom(h, L);
  const WaveNumbers wn(3, 0, L);
  const FourierMode mode{wn, Polynomial{1.0}, Polynomial{0.0}, Polynomial{0.0}};
  const auto forms = evaluate_forms(geom, kSteel, mode);
  const double expected = wn.m_hat() * wn.m_hat() * kPi * L * h;
  EXPECT_NEAR(forms.compression() / expected, 1.0, 1e-13);
  EXPECT_NEAR(forms.radial_shear / expected, 1.0, 1e-13);
  EXPECT_NEAR(forms.midsurface_radial_shear / expected, 1.0, 1e-13);
  const ModeBasis basis(geom, {mode}, 16);
  EXPECT_NEAR(assemble_form(FormKind::Compression, basis, kSteel)(0, 0) / expected, 1.0, 1e-13);
}

TEST(Oracle, IdenticalFormsGiveUnitQuotient) {
  const ShellGeometry geom(0.01, kPi);
  auto pencil = assemble_pencil(geom, kSteel, WaveNumbers(2, 5, kPi), DenominatorKind::RadialShear, {});
  pencil.destabilizing = pencil.stiffness;
  EXPECT_NEAR(min_rayleigh(pencil), 1.0, 1e-10);
}

TEST(Oracle, ReducedQuotientMatchesClosedForm) {
  const ShellGeometry geom(0.01, kPi);
  const CriticalLoadProblem problem(geom, kSteel);
  for (auto [m, n] : {std::pair{1, 5}, {3, 13}, {2, 0}, {7, 4}}) {
    const WaveNumbers wn(m, n, kPi);
    const auto pencil = assemble_pencil(geom, kSteel, wn, DenominatorKind::MidsurfaceRadialShear, {},
                                        ModeSpace::Linearized, NumeratorKind::Simplified);
    const double closed = lambda3_full(problem, wn).value;
    EXPECT_NEAR(min_rayleigh(pencil) / closed, 1.0, 1e-8) << m << "," << n;
  }
}

TEST(Oracle, RicherSpaceIsNotAbove) {
  // Winner and a further pair on the Koiter circle at h = 0.01.
  const ShellGeometry geom(0.01, kPi);
  const CriticalLoadProblem problem(geom, kSteel);
  for (auto [m, n] : {std::pair{1, 4}, {8, 9}}) {
    const WaveNumbers wn(m, n, kPi);
    const double oracle = min_rayleigh(assemble_pencil(geom, kSteel, wn, DenominatorKind::RadialShear, {}));
    const double ratio = oracle / lambda3_tilde(problem, wn).value;
    EXPECT_LE(ratio, 1.0 + 1e-8) << m << "," << n;
    EXPECT_GE(ratio, 0.95) << m << "," << n;
  }
}

TEST(Oracle, SpectralConvergenceInDegree) {
  const ShellGeometry geom(0.01, kPi);
  for (auto [m, n] : {std::pair{1, 4}, {5, 11}}) {
    const WaveNumbers wn(m, n, kPi);
    const double p12 = min_rayleigh(assemble_pencil(geom, kSteel, wn, DenominatorKind::RadialShear, {12, 0}));
    const double p24 = min_rayleigh(assemble_pencil(geom, kSteel, wn, DenominatorKind::RadialShear, {24, 0}));
    EXPECT_LT(std::abs(p12 / p24 - 1.0), 1e-8);
  }
}

TEST(Oracle, QuadratureRefinementIsExact) {
  const ShellGeometry geom(0.05, kPi);
  const WaveNumbers wn(2, 3, kPi);
  const double base = min_rayleigh(assemble_pencil(geom, kSteel, wn, DenominatorKind::Compression, {12, 0}));
  const double fine = min_rayleigh(assemble_pencil(geom, kSteel, wn, DenominatorKind::Compression, {12, 48}));
  EXPECT_LE(std::abs(base / fine - 1.0), 1e-13);
}

TEST(Oracle, SpectrumIsNormalized) {
  const ShellGeometry geom(0.02, kPi);
  const auto pencil = assemble_pencil(geom, kSteel, WaveNumbers(3, 6, kPi), DenominatorKind::Compression, {8, 0});
  const auto spectrum = pencil_spectrum(pencil);
  for (Eigen::Index k = 1; k < spectrum.values.size(); ++k) EXPECT_LE(spectrum.values(k - 1), spectrum.values(k));
  const auto x = spectrum.vectors.col(spectrum.values.size() - 1);
  EXPECT_NEAR(x.dot(pencil.stiffness * x), 1.0, 1e-9);
  EXPECT_NEAR(x.dot(pencil.destabilizing * x), spectrum.values.maxCoeff(), 1e-9 * spectrum.values.maxCoeff());
}

TEST(Oracle, ErrorKinds) {
  const ShellGeometry geom(0.02, kPi);
  auto pencil = assemble_pencil(geom, kSteel, WaveNumbers(1, 2, kPi), DenominatorKind::RadialShear, {});
  ModePencil zero = pencil;
  zero.destabilizing.setZero();
  try {
    (void)min_rayleigh(zero);
    FAIL() << "expected ZeroDenominator";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
  }
  ModePencil indefinite = pencil;
  indefinite.stiffness = -pencil.stiffness;
  try {
    (void)min_rayleigh(indefinite);
    FAIL() << "expected AssemblyDegenerate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssemblyDegenerate);
  }
  EXPECT_THROW((void)assemble_pencil(geom, kSteel, WaveNumbers(1, 2, kPi), DenominatorKind::RadialShear, {3, 0}),
               Error);
}

}  // namespace
}  // namespace koiter
