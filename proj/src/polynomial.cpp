#include "lpa/polynomial.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

Polynomial::Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, Scalar c) {
  std::vector<Scalar> v(degree + 1, Scalar(0));
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Scalar lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial Polynomial::without_x_factors() const {
  if (is_zero()) return *this;
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c != 0; });
  return Polynomial(std::vector<Scalar>(first, coeffs_.end()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(), *this};
  std::vector<Scalar> rem = coeffs_;
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - d.degree() + 1), Scalar(0));
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    Scalar q = rem[k + dd] / d.leading();
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& p) const {
  if (is_zero()) return p.is_zero();
  return p.divmod(*this).second.is_zero();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b * Polynomial({Scalar(-1)});
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c == 0) continue;
    Scalar mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += lpa::to_string(mag);
    if (k > 0) {
      if (mag != 1) out += "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace lpa
