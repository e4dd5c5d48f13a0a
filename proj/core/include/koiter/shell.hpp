#pragma once

namespace koiter {

/**
 * \brief Cylindrical shell I_h x [0, 2pi) x [0, L] with unit mid-surface radius.
 */
class ShellGeometry {
 public:
  /// \brief Throws InvalidArgument unless 0 < h < 1 and L > 0.
  ShellGeometry(double thickness, double length);

  [[nodiscard]] double thickness() const { return h_; }
  [[nodiscard]] double length() const { return L_; }
  [[nodiscard]] double inner_radius() const { return 1.0 - 0.5 * h_; }
  [[nodiscard]] double outer_radius() const { return 1.0 + 0.5 * h_; }
  /// \brief Membership in I_h, with a relative slack of a few ulps at the endpoints.
  [[nodiscard]] bool contains_radius(double r) const;
  /// \brief Throws InvalidArgument if r lies outside I_h.
  void require_radius(double r) const;

 private:
  double h_;
  double L_;
};

/**
 * \brief Fourier indices of a single mode: axial m >= 1, circumferential n >= 0.
 *
 * The continuous axial wave number is m_hat = pi m / L.
 */
class WaveNumbers {
 public:
  WaveNumbers(int m, int n, double length);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double m_hat() const { return m_hat_; }
  [[nodiscard]] double length() const { return L_; }

  friend bool operator==(const WaveNumbers& a, const WaveNumbers& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.L_ == b.L_;
  }

 private:
  int m_;
  int n_;
  double L_;
  double m_hat_;
};

/**
 * \brief Integrals of the trigonometric factor products over [0, 2pi) x [0, L].
 *
 * Names give the theta factor first: "cc" is cos(n theta) cos(m_hat z),
 * "sc" sin(n theta) cos(m_hat z), "cs" cos(n theta) sin(m_hat z),
 * "ss" sin(n theta) sin(m_hat z). Each weight is the integral of the square.
 */
struct AngularWeights {
  double cc = 0.0;
  double sc = 0.0;
  double cs = 0.0;
  double ss = 0.0;

  [[nodiscard]] static AngularWeights of(const WaveNumbers& wn);
};

}  // namespace koiter
