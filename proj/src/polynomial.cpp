#include "hsop/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hsop/errors.hpp"

namespace hsop {

ComplexPoint::ComplexPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("complex point must have finite parts");
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> coeffs(k);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& scalar) {
  if (scalar.is_zero()) throw DomainError("polynomial division by zero scalar");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

Polynomial derivative(const Polynomial& p, std::size_t order) {
  if (order == 0) return p;
  if (p.size() <= order) return {};
  std::vector<Rational> out(p.size() - order);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // d^order/dx^order x^(i+order) = (i+1)_order x^i
    Rational falling(1);
    for (std::size_t j = 1; j <= order; ++j) falling *= Rational(static_cast<long>(i + j));
    out[i] = p.coeff(i + order) * falling;
  }
  return Polynomial(std::move(out));
}

Polynomial reversed(const Polynomial& p, std::size_t n) {
  if (p.size() > n + 1) {
    throw DomainError("reversal degree " + std::to_string(n) + " is below the polynomial degree " +
                      std::to_string(p.size() - 1));
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = p.coeff(n - i);
  return Polynomial(std::move(out));
}

Polynomial alternated(const Polynomial& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Polynomial(std::move(out));
}

ComplexPoint eval_complex(const Polynomial& p, const ComplexPoint& z) {
  std::complex<double> acc = 0.0;
  const std::complex<double> x = z.value();
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const double c = it->to_double();
    if (!std::isfinite(c)) throw NumericRangeError("coefficient " + it->to_string() + " overflows double");
    acc = acc * x + c;
  }
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
    throw NumericRangeError("polynomial value overflows double");
  }
  return ComplexPoint(acc);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = c.abs();
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::optional<Rational> linear_root(const Polynomial& p) {
  if (p.degree() != std::optional<std::size_t>(1)) return std::nullopt;
  return -p.coeff(0) / p.coeff(1);
}

}  // namespace hsop
