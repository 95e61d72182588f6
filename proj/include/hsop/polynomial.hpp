#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsop/complex_point.hpp"
#include "hsop/rational.hpp"

namespace hsop {

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The leading stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * x^power.
  static Polynomial monomial(const Rational& c, std::size_t power);

  /// std::nullopt stands for the degree of the zero polynomial (-infinity).
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return coeffs_.size(); }

  Rational leading() const;
  Rational eval(const Rational& x) const;

  /// x^k * p.
  Polynomial shifted(std::size_t k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator/=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// The identity polynomial x.
inline Polynomial variable() { return Polynomial::monomial(Rational(1), 1); }

/// order-th derivative; zero once order exceeds the degree.
Polynomial derivative(const Polynomial& p, std::size_t order = 1);

/// x^n p(1/x). Throws DomainError when deg p > n.
Polynomial reversed(const Polynomial& p, std::size_t n);

/// p(-x).
Polynomial alternated(const Polynomial& p);

/// Horner evaluation in double precision. Each coefficient is rounded once;
/// accuracy degrades for high degree with large coefficients (deg >~ 25).
/// Throws NumericRangeError if the result or a coefficient is not finite.
ComplexPoint eval_complex(const Polynomial& p, const ComplexPoint& z);

/// Human-readable form such as "3 + 2*x + 1/2*x^2".
std::string to_string(const Polynomial& p);

/// If p has degree exactly one, its root; std::nullopt otherwise.
std::optional<Rational> linear_root(const Polynomial& p);

}  // namespace hsop
