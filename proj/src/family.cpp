#include "hsop/family.hpp"

#include <vector>

#include "hsop/errors.hpp"
#include "hsop/matrix.hpp"

namespace hsop {

namespace {

void require_rho(unsigned rho) {
  if (rho == 0) throw DomainError("rho must be a positive integer");
}

Polynomial from_scaled_coefficients(const std::vector<Rational>& d) {
  std::vector<Rational> coeffs(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) coeffs[j] = d[j] / factorial(j);
  return Polynomial(std::move(coeffs));
}

}  // namespace

std::string_view to_string(Scaling scaling) {
  return scaling == Scaling::ode ? "ode" : "hypergeometric";
}

Scaling parse_scaling(std::string_view text) {
  if (text == "hypergeometric") return Scaling::hypergeometric;
  if (text == "ode") return Scaling::ode;
  throw DomainError("unknown scaling '" + std::string(text) + "'");
}

FamilySpec::FamilySpec(unsigned n, unsigned rho, Scaling scaling) : n_(n), rho_(rho), scaling_(scaling) {
  require_rho(rho);
}

Rational coeff_closed(unsigned n, unsigned k, unsigned rho) {
  require_rho(rho);
  if (k > n) throw DomainError("coefficient index k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  return sign_power(rho) * binomial(n - k + rho - 1, n - k);
}

Polynomial gen_y(const FamilySpec& spec) {
  std::vector<Rational> d(spec.n() + 1);
  for (unsigned j = 0; j <= spec.n(); ++j) d[j] = coeff_closed(spec.n(), j, spec.rho());
  Polynomial y = from_scaled_coefficients(d);
  if (spec.scaling() == Scaling::ode) y *= factorial(spec.n());
  return y;
}

Polynomial gen_y_toeplitz(unsigned n, unsigned rho) {
  require_rho(rho);
  const std::size_t size = n + 1;
  RationalMatrix toeplitz(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = r; c < size; ++c) toeplitz(r, c) = Rational(1);

  std::vector<Rational> last_unit(size);
  last_unit[n] = Rational(1);
  std::vector<Rational> d = power(toeplitz, rho) * last_unit;
  for (auto& v : d) v *= sign_power(rho);
  return from_scaled_coefficients(d);
}

Polynomial gen_y_ode(unsigned n, unsigned rho) {
  require_rho(rho);
  // Coefficient of x^m in L y is
  //   sum_k (-1)^(rho-k) C(rho,k) (m+1)...(m+k) c_(m+k),
  // whose k = 0 term is (-1)^rho c_m. Solve from m = n downwards.
  std::vector<Rational> c(n + 1);
  const Rational diagonal = sign_power(rho);
  for (unsigned m = n + 1; m-- > 0;) {
    Rational rhs = m == n ? Rational(1) : Rational(0);
    Rational rising(1);
    for (unsigned k = 1; k <= rho && m + k <= n; ++k) {
      rising *= Rational(static_cast<long>(m + k));
      rhs -= sign_power(rho - k) * binomial(rho, k) * rising * c[m + k];
    }
    c[m] = rhs / diagonal;
  }
  return Polynomial(std::move(c));
}

Polynomial gen_y_from_2f0(unsigned n, unsigned rho) {
  require_rho(rho);
  // x^n * sum_k (-n)_k (rho)_k (-1/x)^k / k! = sum_k (-n)_k (rho)_k (-1)^k x^(n-k) / k!
  std::vector<Rational> coeffs(n + 1);
  const Rational minus_n(-static_cast<long>(n));
  for (unsigned k = 0; k <= n; ++k) {
    coeffs[n - k] = pochhammer(minus_n, k) * pochhammer(Rational(rho), k) * sign_power(k) / factorial(k);
  }
  return Polynomial(std::move(coeffs)) * (sign_power(rho) / factorial(n));
}

Polynomial gen_u(unsigned n, unsigned rho) {
  require_rho(rho);
  std::vector<Rational> coeffs(n + 1);
  const Rational minus_n(-static_cast<long>(n));
  for (unsigned k = 0; k <= n; ++k) {
    coeffs[k] = pochhammer(minus_n, k) * pochhammer(Rational(rho), k) / factorial(k);
  }
  return Polynomial(std::move(coeffs));
}

ComplexPoint hyp2f0_terminating(unsigned n, unsigned rho, const ComplexPoint& z) {
  return eval_complex(gen_u(n, rho), z);
}

}  // namespace hsop
