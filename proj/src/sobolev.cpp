#include "hsop/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "hsop/errors.hpp"
#include "hsop/parallel.hpp"

namespace hsop {

SobolevForm::SobolevForm(unsigned rho) : rho_(rho) {
  if (rho == 0) throw DomainError("Sobolev form needs rho >= 1");
  generator_.resize(rho + 1);
  for (unsigned l = 0; l <= rho; ++l) generator_[l] = sign_power(l) * binomial(rho, l);
  matrix_ = RationalMatrix(rho + 1, rho + 1);
  for (unsigned l = 0; l <= rho; ++l)
    for (unsigned j = 0; j <= rho; ++j) matrix_(l, j) = sign_power(l + j) * binomial(rho, l) * binomial(rho, j);
}

Polynomial apply_L(unsigned rho, const Polynomial& f) {
  Polynomial out;
  for (unsigned k = 0; k <= rho; ++k) out += derivative(f, k) * (sign_power(rho - k) * binomial(rho, k));
  return out;
}

Rational circle_inner(const Polynomial& f, const Polynomial& g) {
  Rational sum(0);
  const std::size_t common = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < common; ++k) sum += f.coeffs()[k] * g.coeffs()[k];
  return sum;
}

Rational sobolev_inner(const Polynomial& f, const Polynomial& g, const SobolevForm& form) {
  const unsigned rho = form.rho();
  std::vector<Polynomial> df(rho + 1);
  std::vector<Polynomial> dg(rho + 1);
  for (unsigned k = 0; k <= rho; ++k) {
    df[k] = derivative(f, k);
    dg[k] = derivative(g, k);
  }
  Rational sum(0);
  for (unsigned l = 0; l <= rho; ++l)
    for (unsigned j = 0; j <= rho; ++j) sum += form.matrix()(l, j) * circle_inner(df[l], dg[j]);
  return sum;
}

Rational sobolev_inner(const Polynomial& f, const Polynomial& g, unsigned rho) {
  return sobolev_inner(f, g, SobolevForm(rho));
}

RationalMatrix gram(unsigned n_max, unsigned rho, Scaling scaling, bool parallel) {
  const SobolevForm form(rho);
  const std::size_t size = n_max + 1;
  std::vector<Polynomial> family(size);
  for (unsigned n = 0; n <= n_max; ++n) family[n] = gen_y(n, rho, scaling);

  std::vector<std::vector<Rational>> rows(size);
  for_each_index(size, parallel, [&](std::size_t r) {
    rows[r].resize(size);
    for (std::size_t c = 0; c < size; ++c) rows[r][c] = sobolev_inner(family[r], family[c], form);
  });

  RationalMatrix out(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = rows[r][c];
  return out;
}

ComplexPoint circle_inner_quadrature(const Polynomial& f, const Polynomial& g, unsigned num_nodes) {
  const std::size_t max_degree = std::max(f.degree().value_or(0), g.degree().value_or(0));
  if (num_nodes == 0 || num_nodes < 2 * max_degree + 1) {
    throw DomainError("quadrature needs at least " + std::to_string(2 * max_degree + 1) + " nodes, got " +
                      std::to_string(num_nodes));
  }
  std::complex<double> sum = 0.0;
  for (unsigned j = 0; j < num_nodes; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / num_nodes;
    const ComplexPoint node(std::cos(angle), std::sin(angle));
    sum += eval_complex(f, node).value() * std::conj(eval_complex(g, node).value());
  }
  return ComplexPoint(sum / static_cast<double>(num_nodes));
}

}  // namespace hsop
