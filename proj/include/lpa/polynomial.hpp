#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree with no trailing zeros (the zero polynomial has none).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending);
  static Polynomial monomial(std::size_t degree, Scalar c = 1);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Polynomial monic() const;
  /// Divides out the largest power of x.
  Polynomial without_x_factors() const;

  /// Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  /// Whether *this divides p. Only the zero polynomial is divisible by zero.
  bool divides(const Polynomial& p) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lpa
