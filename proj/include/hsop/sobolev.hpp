#pragma once

#include <vector>

#include "hsop/complex_point.hpp"
#include "hsop/family.hpp"
#include "hsop/matrix.hpp"
#include "hsop/polynomial.hpp"
#include "hsop/rational.hpp"

namespace hsop {

/// The (rho+1) x (rho+1) matrix M_{l,j} = (-1)^(l+j) C(rho,l) C(rho,j) of
/// the Sobolev form together with its rank-one generator w_l = (-1)^l C(rho,l),
/// so that M = w w^T.
class SobolevForm {
 public:
  /// Throws DomainError for rho == 0.
  explicit SobolevForm(unsigned rho);

  unsigned rho() const { return rho_; }
  const RationalMatrix& matrix() const { return matrix_; }
  const std::vector<Rational>& generator() const { return generator_; }

 private:
  unsigned rho_;
  RationalMatrix matrix_;
  std::vector<Rational> generator_;
};

/// sum_{k=0}^{rho} (-1)^(rho-k) C(rho,k) f^(k).
Polynomial apply_L(unsigned rho, const Polynomial& f);

/// Integral of f(z) conj(g(z)) against normalized arc length on |z| = 1.
/// Monomials are orthonormal there and all coefficients are real, so this is
/// sum_k f_k g_k.
Rational circle_inner(const Polynomial& f, const Polynomial& g);

/// sum_{l,j} M_{l,j} <f^(l), g^(j)> evaluated entry by entry over the matrix.
Rational sobolev_inner(const Polynomial& f, const Polynomial& g, const SobolevForm& form);
Rational sobolev_inner(const Polynomial& f, const Polynomial& g, unsigned rho);

/// G[n][m] = sobolev_inner(y_n, y_m) for n, m <= n_max.
RationalMatrix gram(unsigned n_max, unsigned rho, Scaling scaling, bool parallel = false);

/// (1/N) sum_j f(z_j) conj(g(z_j)) at the N-th roots of unity. Requires
/// N >= 2 max(deg f, deg g) + 1, otherwise throws DomainError.
ComplexPoint circle_inner_quadrature(const Polynomial& f, const Polynomial& g, unsigned num_nodes);

}  // namespace hsop
