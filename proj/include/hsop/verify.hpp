#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsop/family.hpp"
#include "hsop/polynomial.hpp"
#include "hsop/rational.hpp"

namespace hsop {

// ---------------------------------------------------------------------------
// Reports

enum class CheckStatus { pass, fail, advisory_fail, not_applicable };

std::string_view to_string(CheckStatus status);

/// Outcome of one verification at one parameter point.
///
/// A passing exact check carries a zero residual; a passing numeric check has
/// numeric_error within its tolerance. Advisory checks compare printed
/// formulas against exact results and report `advisory_fail` instead of
/// `fail`; they never gate the overall verdict.
struct CheckReport {
  std::string check_name;
  std::map<std::string, long> params;
  CheckStatus status = CheckStatus::pass;
  bool advisory = false;
  std::optional<Polynomial> residual;
  std::optional<double> numeric_error;
  std::string detail;

  bool passed() const { return status == CheckStatus::pass; }
  /// Mandatory and failed.
  bool blocking() const { return !advisory && status == CheckStatus::fail; }
};

// ---------------------------------------------------------------------------
// Differential equations and the reversal relation

/// x (L y)' - n (L y) for y = y_n(rho; x) in the given scaling.
Polynomial residual_ode_high(unsigned n, unsigned rho, Scaling scaling);
Polynomial residual_ode_high(const Polynomial& y, unsigned n, unsigned rho);

/// x y'' - (x + rho - 1) y' - n (y' - y).
Polynomial residual_ode_second(unsigned n, unsigned rho, Scaling scaling);
Polynomial residual_ode_second(const Polynomial& y, unsigned n, unsigned rho);

/// z^2 u'' + (rho+1) z u' - n (z u' + rho u) - u' for u = u_n(z).
Polynomial residual_u_ode(unsigned n, unsigned rho);
Polynomial residual_u_ode(const Polynomial& u, unsigned n, unsigned rho);

/// u_n(z) against n! (-1)^(n+rho) z^n y_n(rho; -1/z), coefficient by coefficient.
CheckReport check_u_y_relation(unsigned n, unsigned rho);

/// d_k(rho+1) = -sum_{j>=k} d_j(rho) for every k.
CheckReport check_step_rho(unsigned n, unsigned rho);

// ---------------------------------------------------------------------------
// Contiguous relation for u_n (Fasenmyer's method)

/// The five polynomials re-expanded over the terms
/// eps_{n+1}(k) = (-n-1)_k (rho)_k z^k / k!.
enum class Expansion { u_n, u_n_minus_1, u_n_minus_2, z_u_n, z_u_n_minus_1 };
inline constexpr std::array<Expansion, 5> kExpansions = {Expansion::u_n, Expansion::u_n_minus_1,
                                                         Expansion::u_n_minus_2, Expansion::z_u_n,
                                                         Expansion::z_u_n_minus_1};
std::string_view to_string(Expansion expansion);

/// The term ratio multiplying eps_{n+1}(k) for the given expansion.
Rational expansion_multiplier(Expansion expansion, unsigned n, unsigned rho, unsigned k);

/// sum_{k=0}^{n+1} eps_{n+1}(k) * multiplier(k).
Polynomial expansion_series(Expansion expansion, unsigned n, unsigned rho);

/// The polynomial itself, built from gen_u.
Polynomial expansion_direct(Expansion expansion, unsigned n, unsigned rho);

/// Requires n >= 2 and rho >= 2 (the z-multiplied forms divide by rho+k-1).
CheckReport check_fasenmyer_expansions(unsigned n, unsigned rho);

/// Coefficients (phi_1..phi_6) of
///   R_n = phi_1 u_{n-1} + phi_2 u_n + phi_3 u_{n+1} + phi_4 z u_n + phi_5 z u_{n-1} + phi_6 u_{n-2},
/// scaled so that phi_4 = n + rho.
struct PhiVector {
  std::array<Rational, 6> phi;
  unsigned n = 0;
  unsigned rho = 0;
  /// Nullspace dimension of the system that produced phi (1 on success).
  std::size_t nullity = 1;
  /// Nullspace dimension of the bare (n+2) x 6 coefficient matrix. Exceeds
  /// `nullity` when the term-polynomial rows were needed to pin phi down.
  std::size_t coefficient_nullity = 1;
  bool used_term_rows = false;

  const Rational& operator[](std::size_t i) const { return phi[i - 1]; }  // 1-based, as phi_i
};

/// Failure of the exact nullspace solve behind solve_phi.
class NullspaceError : public std::runtime_error {
 public:
  enum class Kind { inconsistent, normalization, ambiguous };

  NullspaceError(Kind kind, std::string message, std::vector<std::vector<Rational>> basis = {})
      : std::runtime_error(std::move(message)), kind_(kind), basis_(std::move(basis)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

 private:
  Kind kind_;
  std::vector<std::vector<Rational>> basis_;
};

/// The six u-side polynomials in phi order.
std::array<Polynomial, 6> relation_terms(unsigned n, unsigned rho);

/// I_{n,k} split by phi: entry i is the polynomial in k multiplying phi_{i+1}.
std::array<Polynomial, 6> term_polynomials(unsigned n, unsigned rho);

/// Exact nullspace of the stacked coefficient matrix of relation_terms. When
/// that matrix leaves more than one direction free (it has only n+2 rows, so
/// this happens at n = 2) the rows of I_{n,k} == 0 as a polynomial in k are
/// appended. Throws NullspaceError when no unique direction exists or the
/// phi_4 component vanishes; DomainError for n < 2 or rho < 2.
PhiVector solve_phi(unsigned n, unsigned rho);

/// The printed closed forms, evaluated as written:
/// phi_4 = n + rho, phi_5 = -1, phi_3 = 1, phi_2 = (n - rho)/(n + rho - 1), phi_1, phi_6.
PhiVector phi_closed(unsigned n, unsigned rho);

Polynomial residual_recurrence_u(unsigned n, unsigned rho, const PhiVector& phi);

enum class PhiSource { solved, printed };

/// The y-side recurrence:
///   phi_1 (n-1) x^2 y_{n-1} + phi_2 (n-1) n x y_n + phi_3 (n-1) n (n+1) y_{n+1}
///   - phi_4 (n-1) n y_n - phi_5 (n-1) x y_{n-1} + phi_6 x^3 y_{n-2}
Polynomial recurrence_y_relation(unsigned n, unsigned rho, const PhiVector& phi);

/// `solved` evaluates recurrence_y_relation with solve_phi; `printed` evaluates
/// the printed three-term-in-x recurrence term by term. Hypergeometric scaling.
Polynomial residual_recurrence_y(unsigned n, unsigned rho, PhiSource source);

/// Maps a u-side residual R(z) of degree <= n+1 to its y-side counterpart
/// (-1)^rho / (n-2)! * x^(n+1) R(-1/x), using only reversal and sign alternation.
Polynomial u_residual_to_y(const Polynomial& u_residual, unsigned n, unsigned rho);

// ---------------------------------------------------------------------------
// Incomplete gamma representation (rho = 1, ode scaling)

struct GammaQuadrature {
  double value = 0.0;
  double upper_limit = 0.0;
  std::size_t subintervals = 0;
  bool converged = false;
};

/// -e^a * integral_a^inf e^-x x^n dx by composite Simpson on [a, a+T], with T
/// chosen so the tail bound e^-T (a+T)^n (n+1) is below tol/10 relative, and
/// the step halved until successive estimates agree to tol/10 relative.
GammaQuadrature incomplete_gamma_quadrature(unsigned n, double a, double tol);

/// Compares the quadrature against y_n(1; a) in ode scaling. Requires a > 0.
CheckReport check_incomplete_gamma(unsigned n, double a, double tol);

// ---------------------------------------------------------------------------
// Full grid

enum class Suite { all, ode, recurrence, gram, gamma, fidelity };
std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);

struct RunOptions {
  unsigned n_max = 12;
  unsigned rho_max = 5;
  Suite suite = Suite::all;
  bool parallel = false;
};

/// Every check of the selected suite over 0 <= n <= n_max, 1 <= rho <= rho_max,
/// sorted by check name, then n, then rho. Failures are returned as data.
std::vector<CheckReport> run_all(const RunOptions& options);
inline std::vector<CheckReport> run_all(unsigned n_max, unsigned rho_max) {
  return run_all(RunOptions{n_max, rho_max});
}

/// True when no mandatory check failed.
bool all_mandatory_pass(const std::vector<CheckReport>& reports);

}  // namespace hsop
