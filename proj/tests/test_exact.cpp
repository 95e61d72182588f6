#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "hsop/errors.hpp"
#include "hsop/matrix.hpp"
#include "hsop/polynomial.hpp"
#include "hsop/rational.hpp"
#include "random_poly.hpp"

using namespace hsop;

namespace {

Polynomial P(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

bool canonical(const Rational& r) {
  const mpz_class g = gcd(r.numerator(), r.denominator());
  return r.denominator() > 0 && g == 1 && (!r.is_zero() || r.denominator() == 1);
}

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational a(mpz_class(6), mpz_class(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(mpz_class(0), mpz_class(-7)).denominator() == 1);
  CHECK(Rational::parse("-10", "15") == Rational(-2) / Rational(3));
  CHECK(Rational::parse("+4", "2").to_string() == "2");
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5", "2"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational to_double is correctly rounded") {
  CHECK(Rational(1) / Rational(3) == Rational(1) / Rational(3));
  CHECK((Rational(1) / Rational(3)).to_double() == 1.0 / 3.0);
  CHECK((Rational(-2) / Rational(7)).to_double() == -2.0 / 7.0);
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
  // 10^400 overflows double.
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(std::isinf(Rational(big).to_double()));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(17, 0) == Rational(1));
  CHECK(binomial(3, 2) == Rational(3));
  CHECK(binomial(2, 5) == Rational(0));
  CHECK(binomial(60, 30).to_string() == "118264581564861424");
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7) / Rational(3), 0) == Rational(1));
  CHECK(pochhammer(Rational(-3), 4) == Rational(0));
  CHECK(pochhammer(Rational(2), 3) == Rational(24));
  CHECK(pochhammer(Rational(1) / Rational(2), 2) == Rational(3) / Rational(4));
  CHECK(pochhammer(Rational(1), 5) == factorial(5));
}

TEST_CASE("polynomial normal form and degree sentinel") {
  const Polynomial zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({1, 2, 0, 0}).degree() == 1u);
  CHECK(P({1, 2}) - P({1, 2}) == zero);
  CHECK(Polynomial::monomial(Rational(0), 4).is_zero());
  CHECK(to_string(P({3, -2, 1})) == "3 - 2*x + x^2");
}

TEST_CASE("derivative") {
  CHECK(derivative(P({0, 0, 0, 1})) == P({0, 0, 3}));
  CHECK(derivative(P({5})).is_zero());
  CHECK(derivative(Polynomial()).is_zero());
  CHECK(derivative(P({-2, -2, -1}), 2) == P({-2}));
  CHECK(derivative(P({1, 1, 1}), 7).is_zero());
  CHECK(derivative(P({1, 1, 1}), 0) == P({1, 1, 1}));
}

TEST_CASE("reversal") {
  CHECK(reversed(P({1, 2, 3}), 2) == P({3, 2, 1}));
  CHECK(reversed(P({1}), 2) == P({0, 0, 1}));
  CHECK(reversed(P({2, 1}), 1) == P({1, 2}));
  CHECK(reversed(Polynomial(), 3).is_zero());
  CHECK_THROWS_AS(reversed(P({1, 2, 3}), 1), DomainError);
  CHECK(alternated(P({1, 1, 1, 1})) == P({1, -1, 1, -1}));
}

TEST_CASE("complex evaluation") {
  const ComplexPoint i(0.0, 1.0);
  CHECK(eval_complex(P({-1, -1}), i) == ComplexPoint(-1.0, -1.0));
  CHECK(eval_complex(P({2, 1}), i) == ComplexPoint(2.0, 1.0));
  CHECK(eval_complex(Polynomial(), ComplexPoint(3.0, -4.0)) == ComplexPoint(0.0, 0.0));
  CHECK_THROWS_AS(ComplexPoint(std::numeric_limits<double>::quiet_NaN(), 0.0), DomainError);
  CHECK_THROWS_AS(ComplexPoint(0.0, std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(eval_complex(Polynomial::monomial(Rational(1), 200), ComplexPoint(1e10, 0.0)), NumericRangeError);
}

TEST_CASE("linear root") {
  CHECK(linear_root(P({2, 1})) == Rational(-2));
  CHECK_FALSE(linear_root(P({2})).has_value());
  CHECK_FALSE(linear_root(P({1, 0, 1})).has_value());
}

TEST_CASE("ring laws hold exactly on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = testing::random_polynomial(rng, 6);
    const Polynomial b = testing::random_polynomial(rng, 6);
    const Polynomial c = testing::random_polynomial(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial());
    const Polynomial combined = a * b - c;
    for (const auto& coeff : combined.coeffs()) CHECK(canonical(coeff));
    if (!(a * b).is_zero()) {
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
    }
  }
}

TEST_CASE("reversal is an involution and derivative is linear") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, 8);
    const Polynomial q = testing::random_polynomial(rng, 8);
    const std::size_t n = 8 + trial % 3;
    CHECK(reversed(reversed(p, n), n) == p);
    const Rational alpha = testing::random_rational(rng);
    const Rational beta = testing::random_rational(rng);
    for (std::size_t order : {1u, 2u, 5u}) {
      CHECK(derivative(p * alpha + q * beta, order) == derivative(p, order) * alpha + derivative(q, order) * beta);
    }
    // Exact evaluation agrees with the product structure.
    const Rational x = testing::random_rational(rng);
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
  }
}

TEST_CASE("matrix power and nullspace") {
  RationalMatrix t(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = r; c < 3; ++c) t(r, c) = Rational(1);
  const RationalMatrix t2 = power(t, 2);
  CHECK(t2(0, 2) == Rational(3));
  CHECK(t2(0, 1) == Rational(2));
  CHECK(power(t, 0) == RationalMatrix::identity(3));
  CHECK(power(t, 5) == t * t * t * t * t);

  RationalMatrix m(2, 3);
  m(0, 0) = Rational(1); m(0, 1) = Rational(2); m(0, 2) = Rational(3);
  m(1, 0) = Rational(2); m(1, 1) = Rational(4); m(1, 2) = Rational(6);
  const auto basis = nullspace(m);
  CHECK(basis.size() == 2);
  CHECK(rank(m) == 1);
  for (const auto& v : basis) {
    const auto image = m * v;
    CHECK(image[0].is_zero());
    CHECK(image[1].is_zero());
  }
  CHECK(nullspace(RationalMatrix::identity(4)).empty());
}
