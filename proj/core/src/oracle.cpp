#include "koiter/oracle.hpp"

#include <cmath>
#include <string>

#include "koiter/errors.hpp"
#include "koiter/quadrature.hpp"

namespace koiter {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Chebyshev values T_k(xi) and derivatives T_k'(xi), k = 0..degree.
void chebyshev(int degree, double xi, VectorXd& value, VectorXd& slope) {
  value.resize(degree + 1);
  slope.resize(degree + 1);
  value(0) = 1.0;
  slope(0) = 0.0;
  if (degree == 0) return;
  value(1) = xi;
  slope(1) = 1.0;
  for (int k = 1; k < degree; ++k) {
    value(k + 1) = 2.0 * xi * value(k) - value(k - 1);
    slope(k + 1) = 2.0 * value(k) + 2.0 * xi * slope(k) - slope(k - 1);
  }
}

// Weighted Gram matrix sum_q w_q a(q, :)^T b(q, :).
MatrixXd gram(const MatrixXd& a, const MatrixXd& b, const VectorXd& w) { return a.transpose() * w.asDiagonal() * b; }
MatrixXd gram(const MatrixXd& a, const VectorXd& w) { return gram(a, a, w); }

// Rows of the strain (or gradient) amplitude functions at the quadrature nodes.
struct StrainRows {
  MatrixXd rr, tt, zz, rt, rz, tz;
};

StrainRows exact_strain(const ModeBasis& b) {
  const double n = b.wave_numbers().n();
  const double mh = b.wave_numbers().m_hat();
  const VectorXd inv_r = b.radii().cwiseInverse();
  StrainRows e;
  e.rr = b.radial_slope();
  e.tt = inv_r.asDiagonal() * (n * b.angular() + b.radial());
  e.zz = mh * b.axial();
  e.rt = 0.5 * (b.angular_slope() - inv_r.asDiagonal() * (n * b.radial() + b.angular()));
  e.rz = 0.5 * (b.axial_slope() - mh * b.radial());
  e.tz = -0.5 * (mh * b.angular() + n * (inv_r.asDiagonal() * b.axial()));
  return e;
}

StrainRows simplified_strain_rows(const ModeBasis& b) {
  const double n = b.wave_numbers().n();
  const double mh = b.wave_numbers().m_hat();
  const Eigen::Index nq = b.radii().size();
  const VectorXd inv_root = b.radii().cwiseSqrt().cwiseInverse();
  const MatrixXd mid = MatrixXd::Ones(nq, 1) * b.midsurface_radial();
  StrainRows e;
  e.rr = inv_root.asDiagonal() * b.radial_slope();
  e.tt = inv_root.asDiagonal() * (n * b.angular() + mid);
  e.zz = inv_root.asDiagonal() * (mh * b.axial());
  e.tz = -0.5 * (inv_root.asDiagonal() * (mh * b.radii().asDiagonal() * b.angular() + n * b.axial()));
  e.rt = MatrixXd::Zero(nq, b.size());
  e.rz = MatrixXd::Zero(nq, b.size());
  return e;
}

MatrixXd elastic_energy(const StrainRows& e, const ModeBasis& b, const IsotropicElasticity& elastic) {
  const auto w = AngularWeights::of(b.wave_numbers());
  const double nu = elastic.poisson_ratio();
  const double shear = 1.0 / (1.0 + nu);
  const double volumetric = nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const VectorXd& mu = b.measure();
  const MatrixXd trace = e.rr + e.tt + e.zz;
  MatrixXd a = w.cc * (volumetric * gram(trace, mu) + shear * (gram(e.rr, mu) + gram(e.tt, mu) + gram(e.zz, mu)));
  a += 2.0 * shear * (w.sc * gram(e.rt, mu) + w.cs * gram(e.rz, mu) + w.ss * gram(e.tz, mu));
  return a;
}

MatrixXd strain_norm(const StrainRows& e, const ModeBasis& b) {
  const auto w = AngularWeights::of(b.wave_numbers());
  const VectorXd& mu = b.measure();
  MatrixXd a = w.cc * (gram(e.rr, mu) + gram(e.tt, mu) + gram(e.zz, mu));
  a += 2.0 * (w.sc * gram(e.rt, mu) + w.cs * gram(e.rz, mu) + w.ss * gram(e.tz, mu));
  return a;
}

MatrixXd gradient_norm(const ModeBasis& b) {
  const auto w = AngularWeights::of(b.wave_numbers());
  const double n = b.wave_numbers().n();
  const double mh = b.wave_numbers().m_hat();
  const VectorXd& mu = b.measure();
  const VectorXd inv_r = b.radii().cwiseInverse();
  // Entries (i, j) = d phi_i / d x_j in the orthonormal cylindrical frame.
  const MatrixXd rr = b.radial_slope();
  const MatrixXd rt = inv_r.asDiagonal() * (-n * b.radial() - b.angular());
  const MatrixXd rz = -mh * b.radial();
  const MatrixXd tr = b.angular_slope();
  const MatrixXd tt = inv_r.asDiagonal() * (n * b.angular() + b.radial());
  const MatrixXd tz = -mh * b.angular();
  const MatrixXd zr = b.axial_slope();
  const MatrixXd zt = inv_r.asDiagonal() * (-n * b.axial());
  const MatrixXd zz = mh * b.axial();
  return w.cc * (gram(rr, mu) + gram(tt, mu) + gram(zz, mu)) + w.sc * (gram(rt, mu) + gram(tr, mu)) +
         w.cs * (gram(rz, mu) + gram(zr, mu)) + w.ss * (gram(tz, mu) + gram(zt, mu));
}

}  // namespace

void RadialDiscretization::validate() const {
  require(degree >= 4, "radial degree p must be >= 4");
  require(nodes() >= degree, "quadrature must be exact for polynomials of degree 2p - 1 (needs >= p nodes)");
}

void ModeBasis::allocate(int nodes, Eigen::Index columns) {
  radii_.resize(nodes);
  measure_.resize(nodes);
  radial_ = MatrixXd::Zero(nodes, columns);
  radial_slope_ = MatrixXd::Zero(nodes, columns);
  angular_ = MatrixXd::Zero(nodes, columns);
  angular_slope_ = MatrixXd::Zero(nodes, columns);
  axial_ = MatrixXd::Zero(nodes, columns);
  axial_slope_ = MatrixXd::Zero(nodes, columns);
  midsurface_radial_ = Eigen::RowVectorXd::Zero(columns);
  const auto rule = gauss_legendre(nodes, geom_.inner_radius(), geom_.outer_radius());
  for (int q = 0; q < nodes; ++q) {
    radii_(q) = rule.nodes[q];
    measure_(q) = rule.weights[q] * rule.nodes[q];
  }
}

ModeBasis::ModeBasis(const ShellGeometry& geom, const WaveNumbers& wn, ModeSpace space,
                     const RadialDiscretization& disc)
    : geom_(geom), wn_(wn) {
  disc.validate();
  const int p = disc.degree;
  const int nb = p + 1;
  const bool has_theta = wn.n() > 0;
  dofs_.space = space;
  dofs_.radial_count = nb;
  if (space == ModeSpace::General) {
    dofs_.angular_offset = nb;
    dofs_.angular_count = has_theta ? nb : 0;
    dofs_.axial_offset = nb + dofs_.angular_count;
    dofs_.axial_count = nb;
  } else {
    dofs_.angular_offset = nb;
    dofs_.angular_count = has_theta ? 1 : 0;
    dofs_.axial_offset = nb + dofs_.angular_count;
    dofs_.axial_count = 1;
  }
  allocate(disc.nodes(), dofs_.size());

  const double h = geom.thickness();
  const double n = wn.n();
  const double mh = wn.m_hat();
  VectorXd t, dt;
  chebyshev(p, 0.0, t, dt);
  midsurface_radial_.head(nb) = t.transpose();
  for (Eigen::Index q = 0; q < radii_.size(); ++q) {
    const double r = radii_(q);
    const double s = r - 1.0;
    chebyshev(p, 2.0 * s / h, t, dt);
    const VectorXd slope = (2.0 / h) * dt;
    radial_.row(q).head(nb) = t.transpose();
    radial_slope_.row(q).head(nb) = slope.transpose();
    if (space == ModeSpace::General) {
      if (has_theta) {
        angular_.row(q).segment(dofs_.angular_offset, nb) = t.transpose();
        angular_slope_.row(q).segment(dofs_.angular_offset, nb) = slope.transpose();
      }
      axial_.row(q).segment(dofs_.axial_offset, nb) = t.transpose();
      axial_slope_.row(q).segment(dofs_.axial_offset, nb) = slope.transpose();
    } else {
      // f_theta = r a_theta + (r-1) n f_r(1), f_z = a_z + (r-1) m_hat f_r(1).
      if (has_theta) {
        angular_.row(q).head(nb) = s * n * midsurface_radial_.head(nb);
        angular_slope_.row(q).head(nb) = n * midsurface_radial_.head(nb);
        angular_(q, dofs_.angular_offset) = r;
        angular_slope_(q, dofs_.angular_offset) = 1.0;
      }
      axial_.row(q).head(nb) = s * mh * midsurface_radial_.head(nb);
      axial_slope_.row(q).head(nb) = mh * midsurface_radial_.head(nb);
      axial_(q, dofs_.axial_offset) = 1.0;
    }
  }
}

ModeBasis::ModeBasis(const ShellGeometry& geom, const std::vector<FourierMode>& modes, int nodes)
    : geom_(geom), wn_(modes.empty() ? WaveNumbers(1, 0, geom.length()) : modes.front().wn) {
  require(!modes.empty(), "at least one mode is required");
  require(nodes >= 1, "quadrature needs at least one node");
  for (const auto& mode : modes) require(mode.wn == wn_, "all modes of a basis must share their wave numbers");
  const auto columns = static_cast<Eigen::Index>(modes.size());
  dofs_.radial_count = static_cast<int>(columns);
  allocate(nodes, columns);
  const bool has_theta = wn_.n() > 0;
  for (Eigen::Index j = 0; j < columns; ++j) {
    const auto& mode = modes[static_cast<std::size_t>(j)];
    const Polynomial dr = mode.radial.derivative();
    const Polynomial dt = mode.angular.derivative();
    const Polynomial dz = mode.axial.derivative();
    midsurface_radial_(j) = mode.radial(0.0);
    for (Eigen::Index q = 0; q < radii_.size(); ++q) {
      const double s = radii_(q) - 1.0;
      radial_(q, j) = mode.radial(s);
      radial_slope_(q, j) = dr(s);
      angular_(q, j) = has_theta ? mode.angular(s) : 0.0;
      angular_slope_(q, j) = has_theta ? dt(s) : 0.0;
      axial_(q, j) = mode.axial(s);
      axial_slope_(q, j) = dz(s);
    }
  }
}

MatrixXd assemble_form(FormKind kind, const ModeBasis& b, const IsotropicElasticity& elastic) {
  const auto w = AngularWeights::of(b.wave_numbers());
  const double mh = b.wave_numbers().m_hat();
  const VectorXd& mu = b.measure();
  switch (kind) {
    case FormKind::Stiffness: return elastic_energy(exact_strain(b), b, elastic);
    case FormKind::SimplifiedStiffness: return elastic_energy(simplified_strain_rows(b), b, elastic);
    case FormKind::StrainNorm: return strain_norm(exact_strain(b), b);
    case FormKind::GradientNorm: return gradient_norm(b);
    case FormKind::RadialShear: return w.cs * mh * mh * gram(b.radial(), mu);
    case FormKind::AngularShear: return w.ss * mh * mh * gram(b.angular(), mu);
    case FormKind::AxialStretch: return w.cc * mh * mh * gram(b.axial(), mu);
    case FormKind::Compression:
      return assemble_form(FormKind::RadialShear, b, elastic) + assemble_form(FormKind::AngularShear, b, elastic) +
             assemble_form(FormKind::AxialStretch, b, elastic);
    case FormKind::MidsurfaceRadialShear: {
      const MatrixXd f1 = b.midsurface_radial();
      return w.cs * mh * mh * mu.sum() * (f1.transpose() * f1);
    }
    case FormKind::RadialNorm: return w.cc * gram(b.radial(), mu);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown form kind");
}

ModePencil assemble_pencil(const ShellGeometry& geom, const IsotropicElasticity& elastic, const WaveNumbers& wn,
                           DenominatorKind denominator, const RadialDiscretization& disc, ModeSpace space,
                           NumeratorKind numerator) {
  const ModeBasis basis(geom, wn, space, disc);
  ModePencil pencil;
  pencil.dofs = basis.dofs();
  pencil.stiffness = assemble_form(
      numerator == NumeratorKind::Exact ? FormKind::Stiffness : FormKind::SimplifiedStiffness, basis, elastic);
  FormKind form = FormKind::Compression;
  if (denominator == DenominatorKind::RadialShear) form = FormKind::RadialShear;
  if (denominator == DenominatorKind::MidsurfaceRadialShear) form = FormKind::MidsurfaceRadialShear;
  pencil.destabilizing = assemble_form(form, basis, elastic);
  // Factorizing here reports a degenerate stiffness at assembly time.
  (void)PencilFactorization(pencil.stiffness);
  return pencil;
}

PencilFactorization::PencilFactorization(const MatrixXd& a) {
  require(a.rows() == a.cols() && a.rows() > 0, "pencil forms must be square and nonempty");
  scaling_.resize(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (!(a(i, i) > 0.0)) {
      throw Error(ErrorKind::AssemblyDegenerate, "stiffness form has a nonpositive diagonal entry");
    }
    scaling_(i) = 1.0 / std::sqrt(a(i, i));
  }
  llt_.compute(scaling_.asDiagonal() * a * scaling_.asDiagonal());
  if (llt_.info() != Eigen::Success) {
    throw Error(ErrorKind::AssemblyDegenerate, "stiffness form failed the Cholesky factorization");
  }
}

MatrixXd PencilFactorization::congruence(const MatrixXd& b) const {
  require(b.rows() == scaling_.size() && b.cols() == scaling_.size(), "pencil forms must have matching sizes");
  MatrixXd c = scaling_.asDiagonal() * b * scaling_.asDiagonal();
  llt_.matrixL().solveInPlace(c);
  c.transposeInPlace();
  llt_.matrixL().solveInPlace(c);
  return 0.5 * (c + c.transpose());
}

Eigen::VectorXd PencilFactorization::eigenvalues(const MatrixXd& b) const {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(congruence(b), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

PencilSpectrum PencilFactorization::spectrum(const MatrixXd& b) const {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(congruence(b));
  PencilSpectrum out;
  out.values = solver.eigenvalues();
  // x = D L^{-T} y has x^T A x = y^T y = 1.
  MatrixXd x = solver.eigenvectors();
  llt_.matrixU().solveInPlace(x);
  out.vectors = scaling_.asDiagonal() * x;
  return out;
}

PencilSpectrum pencil_spectrum(const ModePencil& pencil) {
  return PencilFactorization(pencil.stiffness).spectrum(pencil.destabilizing);
}

double min_rayleigh(const ModePencil& pencil) {
  if (pencil.destabilizing.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorKind::ZeroDenominator, "destabilizing form vanishes on the mode");
  }
  const VectorXd mu = PencilFactorization(pencil.stiffness).eigenvalues(pencil.destabilizing);
  const double top = mu(mu.size() - 1);
  if (!(top > 0.0)) throw Error(ErrorKind::ZeroDenominator, "destabilizing form has no positive direction");
  return 1.0 / top;
}

ModeIntegrals evaluate_forms(const ShellGeometry& geom, const IsotropicElasticity& elastic, const FourierMode& mode,
                             int nodes) {
  const ModeBasis basis(geom, {mode}, nodes);
  auto value = [&](FormKind kind) { return assemble_form(kind, basis, elastic)(0, 0); };
  ModeIntegrals out;
  out.stiffness = value(FormKind::Stiffness);
  out.simplified_stiffness = value(FormKind::SimplifiedStiffness);
  out.strain_norm = value(FormKind::StrainNorm);
  out.gradient_norm = value(FormKind::GradientNorm);
  out.radial_shear = value(FormKind::RadialShear);
  out.angular_shear = value(FormKind::AngularShear);
  out.axial_stretch = value(FormKind::AxialStretch);
  out.midsurface_radial_shear = value(FormKind::MidsurfaceRadialShear);
  out.radial_norm = value(FormKind::RadialNorm);
  return out;
}

}  // namespace koiter
