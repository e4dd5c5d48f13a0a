#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

namespace koiter {

/**
 * \brief Polynomial in the mid-surface offset s = r - 1, stored by monomial coefficients.
 *
 * Radial profiles live on |s| <= h/2, where the monomial basis is well conditioned.
 */
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) {}
  explicit Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

  [[nodiscard]] static Polynomial constant(double value) { return Polynomial{value}; }
  /// \brief value + slope * s.
  [[nodiscard]] static Polynomial affine(double value, double slope) { return Polynomial{value, slope}; }

  /// \brief Evaluates at offset s = r - 1.
  [[nodiscard]] double operator()(double s) const;
  /// \brief Evaluates at radius r.
  [[nodiscard]] double at_radius(double r) const { return (*this)(r - 1.0); }

  [[nodiscard]] Polynomial derivative() const;
  /// \brief Antiderivative vanishing at s = 0.
  [[nodiscard]] Polynomial antiderivative() const;

  [[nodiscard]] const std::vector<double>& coefficients() const { return c_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double c, const Polynomial& a);

 private:
  std::vector<double> c_;
};

}  // namespace koiter
