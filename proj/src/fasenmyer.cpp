#include <string>

#include "hsop/errors.hpp"
#include "hsop/matrix.hpp"
#include "hsop/verify.hpp"

namespace hsop {

namespace {

void require_recurrence_range(unsigned n, unsigned rho, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + " needs n >= 2, got n=" + std::to_string(n));
  if (rho < 2) throw DomainError(std::string(what) + " needs rho >= 2, got rho=" + std::to_string(rho));
}

Rational integer(long v) { return Rational(v); }

// eps_{n+1}(k) without the z^k.
Rational epsilon_coefficient(unsigned n, unsigned rho, unsigned k) {
  return pochhammer(integer(-static_cast<long>(n) - 1), k) * pochhammer(integer(rho), k) / factorial(k);
}

CheckReport base_report(std::string name, unsigned n, unsigned rho) {
  CheckReport report;
  report.check_name = std::move(name);
  report.params = {{"n", static_cast<long>(n)}, {"rho", static_cast<long>(rho)}};
  return report;
}

}  // namespace

std::string_view to_string(Expansion expansion) {
  switch (expansion) {
    case Expansion::u_n: return "u_n";
    case Expansion::u_n_minus_1: return "u_{n-1}";
    case Expansion::u_n_minus_2: return "u_{n-2}";
    case Expansion::z_u_n: return "z*u_n";
    case Expansion::z_u_n_minus_1: return "z*u_{n-1}";
  }
  return "?";
}

Rational expansion_multiplier(Expansion expansion, unsigned n, unsigned rho, unsigned k) {
  const Rational nn(static_cast<long>(n));
  const Rational kk(static_cast<long>(k));
  const Rational one(1);
  switch (expansion) {
    case Expansion::u_n:
      return (nn + one - kk) / (nn + one);
    case Expansion::u_n_minus_1:
      return (nn + one - kk) * (nn - kk) / ((nn + one) * nn);
    case Expansion::u_n_minus_2:
      return (nn + one - kk) * (nn - kk) * (nn - one - kk) / ((nn + one) * nn * (nn - one));
    case Expansion::z_u_n:
      return -kk / ((nn + one) * (integer(rho) + kk - one));
    case Expansion::z_u_n_minus_1:
      return -kk * (nn + one - kk) / (nn * (nn + one) * (integer(rho) + kk - one));
  }
  throw DomainError("unknown expansion");
}

Polynomial expansion_series(Expansion expansion, unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "Fasenmyer expansion");
  std::vector<Rational> coeffs(n + 2);
  for (unsigned k = 0; k <= n + 1; ++k) {
    coeffs[k] = epsilon_coefficient(n, rho, k) * expansion_multiplier(expansion, n, rho, k);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial expansion_direct(Expansion expansion, unsigned n, unsigned rho) {
  switch (expansion) {
    case Expansion::u_n: return gen_u(n, rho);
    case Expansion::u_n_minus_1: return gen_u(n - 1, rho);
    case Expansion::u_n_minus_2: return gen_u(n - 2, rho);
    case Expansion::z_u_n: return gen_u(n, rho).shifted(1);
    case Expansion::z_u_n_minus_1: return gen_u(n - 1, rho).shifted(1);
  }
  throw DomainError("unknown expansion");
}

CheckReport check_fasenmyer_expansions(unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "check_fasenmyer_expansions");
  CheckReport report = base_report("recurrence.fasenmyer_expansions", n, rho);
  report.residual = Polynomial();
  for (Expansion e : kExpansions) {
    Polynomial diff = expansion_direct(e, n, rho) - expansion_series(e, n, rho);
    if (!diff.is_zero()) {
      report.status = CheckStatus::fail;
      report.residual = diff;
      report.detail = std::string(to_string(e)) + " differs from its eps_{n+1} expansion by " + to_string(diff);
      return report;
    }
  }
  report.detail = "5 expansions agree for k = 0.." + std::to_string(n + 1);
  return report;
}

std::array<Polynomial, 6> relation_terms(unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "relation_terms");
  const Polynomial u_prev = gen_u(n - 1, rho);
  const Polynomial u_cur = gen_u(n, rho);
  return {u_prev, u_cur, gen_u(n + 1, rho), u_cur.shifted(1), u_prev.shifted(1), gen_u(n - 2, rho)};
}

std::array<Polynomial, 6> term_polynomials(unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "term_polynomials");
  const Polynomial k = variable();
  const auto c = [](long v) { return Polynomial::constant(Rational(v)); };
  const long nn = n;
  const Polynomial shifted_rho = c(static_cast<long>(rho) - 1) + k;  // rho + k - 1
  const Polynomial n_plus_1_minus_k = c(nn + 1) - k;
  const Polynomial n_minus_k = c(nn) - k;
  const Polynomial n_minus_1_minus_k = c(nn - 1) - k;
  return {
      n_minus_k * n_plus_1_minus_k * c(nn - 1) * shifted_rho,
      n_plus_1_minus_k * c((nn - 1) * nn) * shifted_rho,
      c((nn - 1) * nn * (nn + 1)) * shifted_rho,
      -(k * c((nn - 1) * nn)),
      -(n_plus_1_minus_k * k * c(nn - 1)),
      n_plus_1_minus_k * n_minus_k * n_minus_1_minus_k * shifted_rho,
  };
}

PhiVector solve_phi(unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "solve_phi");
  const auto terms = relation_terms(n, rho);

  RationalMatrix coefficients(n + 2, 6);
  for (std::size_t col = 0; col < 6; ++col)
    for (std::size_t row = 0; row < n + 2; ++row) coefficients(row, col) = terms[col].coeff(row);

  PhiVector out;
  out.n = n;
  out.rho = rho;
  std::vector<std::vector<Rational>> basis = nullspace(coefficients);
  out.coefficient_nullity = basis.size();

  if (basis.size() > 1) {
    // Too few powers of z to separate the directions; require I_{n,k} to
    // vanish identically in k as well.
    const auto pieces = term_polynomials(n, rho);
    constexpr std::size_t kTermRows = 5;  // I_{n,k} has degree <= 4 in k
    RationalMatrix augmented(n + 2 + kTermRows, 6);
    for (std::size_t col = 0; col < 6; ++col) {
      for (std::size_t row = 0; row < n + 2; ++row) augmented(row, col) = coefficients(row, col);
      for (std::size_t p = 0; p < kTermRows; ++p) augmented(n + 2 + p, col) = pieces[col].coeff(p);
    }
    basis = nullspace(augmented);
    out.used_term_rows = true;
  }
  out.nullity = basis.size();

  const std::string where = " (n=" + std::to_string(n) + ", rho=" + std::to_string(rho) + ")";
  if (basis.empty()) {
    throw NullspaceError(NullspaceError::Kind::inconsistent, "relation system has only the trivial solution" + where);
  }
  if (basis.size() > 1) {
    throw NullspaceError(NullspaceError::Kind::ambiguous,
                         "relation system has a " + std::to_string(basis.size()) + "-dimensional nullspace" + where,
                         basis);
  }
  const std::vector<Rational>& v = basis.front();
  if (v[3].is_zero()) {
    throw NullspaceError(NullspaceError::Kind::normalization, "nullspace vector has phi_4 = 0" + where, basis);
  }
  const Rational scale = Rational(static_cast<long>(n + rho)) / v[3];
  for (std::size_t i = 0; i < 6; ++i) out.phi[i] = v[i] * scale;
  return out;
}

PhiVector phi_closed(unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "phi_closed");
  const Rational nn(static_cast<long>(n));
  const Rational r(static_cast<long>(rho));
  const Rational one(1);
  const Rational two(2);

  PhiVector out;
  out.n = n;
  out.rho = rho;
  out.nullity = 0;
  out.coefficient_nullity = 0;
  out.phi[3] = nn + r;
  out.phi[4] = -one;
  out.phi[2] = one;
  out.phi[1] = (nn - r) / (nn + r - one);
  out.phi[0] = -nn * (nn + one) / two - (nn - r) * nn / (nn + r - one) - (nn - one) / (nn + r - two) +
               (nn + r) * (nn - one) * nn / (two * (nn + r - two));
  out.phi[5] = nn * (nn + one) / two + (nn - r) * (nn - one) / (nn + r - one) + (nn - one) / (nn + r - two) -
               (nn + r) * (nn - one) * nn / (two * (nn + r - two)) - one;
  return out;
}

Polynomial residual_recurrence_u(unsigned n, unsigned rho, const PhiVector& phi) {
  if (phi.n != n || phi.rho != rho) throw DomainError("phi vector belongs to different (n, rho)");
  const auto terms = relation_terms(n, rho);
  Polynomial sum;
  for (std::size_t i = 0; i < 6; ++i) sum += terms[i] * phi.phi[i];
  return sum;
}

Polynomial recurrence_y_relation(unsigned n, unsigned rho, const PhiVector& phi) {
  require_recurrence_range(n, rho, "recurrence_y_relation");
  if (phi.n != n || phi.rho != rho) throw DomainError("phi vector belongs to different (n, rho)");
  const Polynomial y_prev2 = gen_y(n - 2, rho);
  const Polynomial y_prev = gen_y(n - 1, rho);
  const Polynomial y_cur = gen_y(n, rho);
  const Polynomial y_next = gen_y(n + 1, rho);
  const Rational nn(static_cast<long>(n));
  const Rational one(1);

  Polynomial out;
  out += y_prev.shifted(2) * (phi[1] * (nn - one));
  out += y_cur.shifted(1) * (phi[2] * (nn - one) * nn);
  out += y_next * (phi[3] * (nn - one) * nn * (nn + one));
  out -= y_cur * (phi[4] * (nn - one) * nn);
  out -= y_prev.shifted(1) * (phi[5] * (nn - one));
  out += y_prev2.shifted(3) * phi[6];
  return out;
}

Polynomial residual_recurrence_y(unsigned n, unsigned rho, PhiSource source) {
  require_recurrence_range(n, rho, "residual_recurrence_y");
  if (source == PhiSource::solved) return recurrence_y_relation(n, rho, solve_phi(n, rho));

  // Printed form, term by term; the long coefficients of y_{n-1} and y_{n-2}
  // are the printed phi_1 and phi_6.
  const PhiVector printed = phi_closed(n, rho);
  const Rational nn(static_cast<long>(n));
  const Rational r(static_cast<long>(rho));
  const Rational one(1);
  const Polynomial y_prev2 = gen_y(n - 2, rho);
  const Polynomial y_prev = gen_y(n - 1, rho);
  const Polynomial y_cur = gen_y(n, rho);
  const Polynomial y_next = gen_y(n + 1, rho);

  Polynomial out;
  out += y_prev.shifted(2) * (printed[1] * (nn - one));
  out += y_cur.shifted(1) * ((nn - r) / (nn + r - one) * (nn - one) * nn);
  out += y_next * ((nn - one) * nn * (nn + one));
  out += y_prev2.shifted(3) * printed[6];
  out -= y_cur * ((nn + r) * (nn - one) * nn);
  out += y_prev.shifted(1) * (nn - one);
  return out;
}

Polynomial u_residual_to_y(const Polynomial& u_residual, unsigned n, unsigned rho) {
  require_recurrence_range(n, rho, "u_residual_to_y");
  return reversed(alternated(u_residual), n + 1) * (sign_power(rho) / factorial(n - 2));
}

}  // namespace hsop
