#include "hsop/rational.hpp"

#include <cmath>
#include <string>

#include <mpfr.h>

#include "hsop/errors.hpp"

namespace hsop {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpz_class value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert non-finite double to Rational");
  Rational r;
  r.value_ = mpq_class(value);
  return r;
}

Rational Rational::parse(std::string_view numerator, std::string_view denominator) {
  return Rational(parse_integer(numerator), parse_integer(denominator));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 128);
  mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
  const double result = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return result;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return Rational(out);
}

Rational factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

Rational pochhammer(const Rational& c, std::uint64_t k) {
  Rational product(1);
  Rational factor = c;
  for (std::uint64_t i = 0; i < k; ++i) {
    product *= factor;
    if (product.is_zero()) break;
    factor += Rational(1);
  }
  return product;
}

}  // namespace hsop
