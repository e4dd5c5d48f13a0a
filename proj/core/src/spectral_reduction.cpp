#include "koiter/spectral_reduction.hpp"

#include <cmath>
#include <utility>

#include "koiter/errors.hpp"
#include "koiter/quadrature.hpp"

namespace koiter {

LinearizedMode::LinearizedMode(WaveNumbers wn, double a_theta, double a_z, Polynomial radial)
    : wn_(std::move(wn)), a_theta_(wn_.n() == 0 ? 0.0 : a_theta), a_z_(a_z), radial_(std::move(radial)) {
  require(std::isfinite(a_theta_) && std::isfinite(a_z_), "mode amplitudes must be finite");
}

LinearizedMode LinearizedMode::with_optimal_profile(WaveNumbers wn, double a_theta, double a_z,
                                                    const IsotropicElasticity& elastic) {
  const LinearizedMode seed(wn, a_theta, a_z);
  const double n = wn.n();
  const double mh = wn.m_hat();
  const double k = elastic.relaxation_factor();
  // p(r) = p0 + p1 (r - 1); f_r = 1 - k * int_1^r p.
  const double p0 = 1.0 + n * seed.a_theta() + mh * a_z;
  const double p1 = n * seed.a_theta() + n * n + mh * mh;
  return {std::move(wn), seed.a_theta(), a_z, Polynomial{1.0, -k * p0, -0.5 * k * p1}};
}

Polynomial LinearizedMode::angular() const {
  if (wn_.n() == 0) return Polynomial{};
  // r a_theta + (r-1) n f_r(1) = a_theta + (a_theta + n f_r(1)) s.
  return Polynomial::affine(a_theta_, a_theta_ + wn_.n() * midsurface_radial());
}

Polynomial LinearizedMode::axial() const { return Polynomial::affine(a_z_, wn_.m_hat() * midsurface_radial()); }

FourierMode LinearizedMode::to_fourier() const { return {wn_, radial_, angular(), axial()}; }

LinearizedMode LinearizedMode::normalized() const {
  const double f1 = midsurface_radial();
  if (f1 == 0.0) throw Error(ErrorKind::ZeroDenominator, "mode has f_r(1) = 0 and cannot be normalized");
  return {wn_, a_theta_ / f1, a_z_ / f1, (1.0 / f1) * radial_};
}

SymStrain strain_components(const LinearizedMode& mode, const ShellGeometry& geom, double r) {
  geom.require_radius(r);
  const double s = r - 1.0;
  const double n = mode.wave_numbers().n();
  const double mh = mode.wave_numbers().m_hat();
  const double at = mode.a_theta();
  const double az = mode.a_z();
  const double f1 = mode.midsurface_radial();
  const double f = mode.radial()(s);
  const double fp = mode.radial().derivative()(s);
  SymStrain e;
  e.rr = fp;
  e.rt = n * (f1 - f) / (2.0 * r);
  e.rz = mh * (f1 - f) / 2.0;
  e.tt = (n * (r * at + s * n * f1) + f) / r;
  e.tz = -(mh * r * r * at + n * az + (r * r - 1.0) * mh * n * f1) / (2.0 * r);
  e.zz = mh * (az + s * mh * f1);
  return e;
}

SymStrain mode_strain(const FourierMode& mode, const ShellGeometry& geom, double r) {
  geom.require_radius(r);
  const double s = r - 1.0;
  const double n = mode.wn.n();
  const double mh = mode.wn.m_hat();
  const double fr = mode.radial(s);
  const double frp = mode.radial.derivative()(s);
  const double ft = n == 0 ? 0.0 : mode.angular(s);
  const double ftp = n == 0 ? 0.0 : mode.angular.derivative()(s);
  const double fz = mode.axial(s);
  const double fzp = mode.axial.derivative()(s);
  SymStrain e;
  e.rr = frp;
  e.tt = (n * ft + fr) / r;
  e.zz = mh * fz;
  e.rt = 0.5 * (ftp - (n * fr + ft) / r);
  e.rz = 0.5 * (fzp - mh * fr);
  e.tz = -0.5 * (mh * ft + n * fz / r);
  return e;
}

SymStrain simplified_strain(const LinearizedMode& mode, const ShellGeometry& geom, double r) {
  geom.require_radius(r);
  const double s = r - 1.0;
  const double n = mode.wave_numbers().n();
  const double mh = mode.wave_numbers().m_hat();
  const double at = mode.a_theta();
  const double az = mode.a_z();
  const double f1 = mode.midsurface_radial();
  const double root = std::sqrt(r);
  SymStrain e;
  e.rr = mode.radial().derivative()(s) / root;
  e.tt = (n * (r * at + s * n * f1) + f1) / root;
  e.tz = -(mh * r * r * at + n * az + (r * r - 1.0) * mh * n * f1) / (2.0 * root);
  e.zz = mh * (az + s * mh * f1) / root;
  return e;
}

double compression_driver(const LinearizedMode& mode, double r) {
  const double s = r - 1.0;
  const double n = mode.wave_numbers().n();
  const double mh = mode.wave_numbers().m_hat();
  const double f1 = mode.midsurface_radial();
  return n * r * mode.a_theta() + s * n * n * f1 + f1 + mh * mode.a_z() + s * mh * mh * f1;
}

double optimal_fr_slope(const LinearizedMode& mode, const IsotropicElasticity& elastic, const ShellGeometry& geom,
                        double r) {
  geom.require_radius(r);
  return -elastic.relaxation_factor() * compression_driver(mode, r);
}

LinearizedMode linearize(const FourierMode& mode) {
  const double at = mode.wn.n() == 0 ? 0.0 : mode.angular(0.0);
  return {mode.wn, at, mode.axial(0.0), mode.radial};
}

double weighted_energy(const IsotropicElasticity& elastic, const SymStrain& x, const AngularWeights& w) {
  const double nu = elastic.poisson_ratio();
  const double shear = 1.0 / (1.0 + nu);
  const double volumetric = nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const double tr = x.trace();
  const double normal = w.cc * (volumetric * tr * tr + shear * (x.rr * x.rr + x.tt * x.tt + x.zz * x.zz));
  const double shears = 2.0 * shear * (w.sc * x.rt * x.rt + w.cs * x.rz * x.rz + w.ss * x.tz * x.tz);
  return normal + shears;
}

double mode_energy(const LinearizedMode& mode, const ShellGeometry& geom, const IsotropicElasticity& elastic,
                   StrainModel model) {
  const auto rule = gauss_legendre(kRadialQuadratureNodes, geom.inner_radius(), geom.outer_radius());
  const auto weights = AngularWeights::of(mode.wave_numbers());
  double total = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double r = rule.nodes[q];
    const SymStrain x = model == StrainModel::Exact ? strain_components(mode, geom, r)
                                                    : simplified_strain(mode, geom, r);
    total += rule.weights[q] * r * weighted_energy(elastic, x, weights);
  }
  return total;
}

double midsurface_compression(const LinearizedMode& mode, const ShellGeometry& geom) {
  const double mh = mode.wave_numbers().m_hat();
  const double f1 = mode.midsurface_radial();
  // The integral of r dr over I_h equals h exactly.
  return AngularWeights::of(mode.wave_numbers()).cs * geom.thickness() * mh * mh * f1 * f1;
}

double simplified_quotient(const LinearizedMode& mode, const ShellGeometry& geom, const IsotropicElasticity& elastic) {
  const double denominator = midsurface_compression(mode, geom);
  if (!(denominator > 0.0)) throw Error(ErrorKind::ZeroDenominator, "mode has vanishing mid-surface compression");
  return mode_energy(mode, geom, elastic, StrainModel::Simplified) / denominator;
}

}  // namespace koiter
