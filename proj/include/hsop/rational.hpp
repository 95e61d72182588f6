#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hsop {

/// Exact rational number backed by GMP.
///
/// Always held in canonical form: positive denominator, numerator and
/// denominator coprime, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Exact value of a finite double (every finite double is a dyadic rational).
  static Rational from_double(double value);

  /// Parses decimal integer strings, e.g. ("-3", "4").
  static Rational parse(std::string_view numerator, std::string_view denominator);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Correctly rounded conversion via a 128-bit intermediate. May return
  /// +-inf when the magnitude exceeds the double range.
  double to_double() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Binomial coefficient C(a, b); zero when b > a.
Rational binomial(std::uint64_t a, std::uint64_t b);

/// n! as an exact integer.
Rational factorial(std::uint64_t n);

/// Rising factorial (c)_k = c (c+1) ... (c+k-1), with (c)_0 = 1.
Rational pochhammer(const Rational& c, std::uint64_t k);

/// (-1)^k.
inline Rational sign_power(std::uint64_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace hsop
