#pragma once

#include <string>
#include <string_view>

#include "hsop/complex_point.hpp"
#include "hsop/polynomial.hpp"
#include "hsop/rational.hpp"

namespace hsop {

/// Normalization of y_n(rho; x).
///
/// `hypergeometric` is the family sum_j d_j(rho) x^j / j! whose defining
/// operator image is x^n / n!. `ode` is n! times that polynomial and maps to
/// x^n exactly.
enum class Scaling { hypergeometric, ode };

std::string_view to_string(Scaling scaling);
/// Accepts "hypergeometric" or "ode"; throws DomainError otherwise.
Scaling parse_scaling(std::string_view text);

/// Selects one member of the family. rho >= 1 is enforced on construction.
class FamilySpec {
 public:
  FamilySpec(unsigned n, unsigned rho, Scaling scaling = Scaling::hypergeometric);

  unsigned n() const { return n_; }
  unsigned rho() const { return rho_; }
  Scaling scaling() const { return scaling_; }

 private:
  unsigned n_;
  unsigned rho_;
  Scaling scaling_;
};

/// d_k(rho) = (-1)^rho C(n-k+rho-1, n-k). Throws DomainError if k > n or rho == 0.
Rational coeff_closed(unsigned n, unsigned k, unsigned rho);

/// Closed-form generator.
Polynomial gen_y(const FamilySpec& spec);
inline Polynomial gen_y(unsigned n, unsigned rho, Scaling scaling = Scaling::hypergeometric) {
  return gen_y(FamilySpec(n, rho, scaling));
}

/// Coefficients from (-1)^rho T^rho e_n with T the upper-triangular all-ones
/// matrix, in hypergeometric scaling.
Polynomial gen_y_toeplitz(unsigned n, unsigned rho);

/// Solves sum_k (-1)^(rho-k) C(rho,k) y^(k) = x^n by back-substitution on the
/// coefficient system, leading coefficient first. Returns the ode scaling.
Polynomial gen_y_ode(unsigned n, unsigned rho);

/// (-1)^rho / n! * x^n 2F0(-n, rho; -; -1/x) with the powers of 1/x cleared.
/// Hypergeometric scaling.
Polynomial gen_y_from_2f0(unsigned n, unsigned rho);

/// u_n(z) = 2F0(-n, rho; -; z) = sum_k (-n)_k (rho)_k z^k / k!.
Polynomial gen_u(unsigned n, unsigned rho);

/// Terminating 2F0(-n, rho; -; z), summed exactly then evaluated at z.
ComplexPoint hyp2f0_terminating(unsigned n, unsigned rho, const ComplexPoint& z);

}  // namespace hsop
