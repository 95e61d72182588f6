#include <doctest.h>

#include <cmath>

#include "hsop/errors.hpp"
#include "hsop/verify.hpp"

using namespace hsop;

namespace {

Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

// -e^a Gamma(n+1, a) = -n! sum_{k<=n} a^k / k!, in plain double arithmetic.
double gamma_closed_form(unsigned n, double a) {
  double term = 1.0;
  double sum = 1.0;
  for (unsigned k = 1; k <= n; ++k) {
    term *= a / k;
    sum += term;
  }
  return -std::tgamma(n + 1.0) * sum;
}

}  // namespace

TEST_CASE("high-order differential equation") {
  CHECK(residual_ode_high(1, 1, Scaling::ode).is_zero());
  for (unsigned rho = 1; rho <= 4; ++rho) CHECK(residual_ode_high(0, rho, Scaling::hypergeometric).is_zero());
  CHECK(residual_ode_high(5, 3, Scaling::hypergeometric).is_zero());
  // A wrong polynomial is caught.
  CHECK_FALSE(residual_ode_high(gen_y(3, 2) + Polynomial({q(1)}), 3, 2).is_zero());
}

TEST_CASE("second-order differential equation") {
  for (unsigned rho = 1; rho <= 5; ++rho) {
    CHECK(residual_ode_second(1, rho, Scaling::hypergeometric).is_zero());
    CHECK(residual_ode_second(1, rho, Scaling::ode).is_zero());
    CHECK(residual_ode_second(0, rho, Scaling::ode).is_zero());
  }
  CHECK(residual_ode_second(4, 2, Scaling::hypergeometric).is_zero());
  CHECK_FALSE(residual_ode_second(gen_y(4, 3), 4, 2).is_zero());
}

TEST_CASE("hypergeometric equation for u_n") {
  for (unsigned rho = 1; rho <= 5; ++rho) {
    CHECK(residual_u_ode(1, rho).is_zero());
    CHECK(residual_u_ode(0, rho).is_zero());
  }
  CHECK(residual_u_ode(3, 2).is_zero());
  CHECK_FALSE(residual_u_ode(gen_u(3, 3), 3, 2).is_zero());
}

TEST_CASE("all differential equations and the reversal relation on the grid") {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned rho = 1; rho <= 6; ++rho) {
      CAPTURE(n);
      CAPTURE(rho);
      for (Scaling s : {Scaling::hypergeometric, Scaling::ode}) {
        CHECK(residual_ode_high(n, rho, s).is_zero());
        CHECK(residual_ode_second(n, rho, s).is_zero());
      }
      CHECK(residual_u_ode(n, rho).is_zero());
      CHECK(check_u_y_relation(n, rho).passed());
    }
  }
}

TEST_CASE("reversal relation examples") {
  // u_2 = 1 - 4z + 6z^2 = 2 z^2 y_2(2; -1/z) with y_2 = 3 + 2x + x^2/2.
  CHECK(gen_u(2, 2) == Polynomial({q(1), q(-4), q(6)}));
  const CheckReport r = check_u_y_relation(2, 2);
  CHECK(r.passed());
  REQUIRE(r.residual.has_value());
  CHECK(r.residual->is_zero());
  CHECK(check_u_y_relation(0, 3).passed());
  CHECK(check_u_y_relation(1, 1).passed());
}

TEST_CASE("coefficient step recurrence") {
  CHECK(check_step_rho(2, 1).passed());
  for (unsigned rho = 1; rho <= 6; ++rho) CHECK(check_step_rho(0, rho).passed());
  CHECK(check_step_rho(5, 4).passed());
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned rho = 1; rho <= 5; ++rho) CHECK(check_step_rho(n, rho).passed());
}

TEST_CASE("Fasenmyer expansions") {
  for (unsigned n = 2; n <= 6; ++n) {
    // k = 0 term of the u_n expansion: eps(0) (n+1)/(n+1) = 1.
    CHECK(expansion_multiplier(Expansion::u_n, n, 2, 0) == Rational(1));
    CHECK(expansion_series(Expansion::u_n, n, 3).coeff(0) == Rational(1));
  }
  CHECK(check_fasenmyer_expansions(2, 2).passed());
  CHECK(check_fasenmyer_expansions(3, 3).passed());
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned rho = 2; rho <= 5; ++rho) CHECK(check_fasenmyer_expansions(n, rho).passed());
  CHECK_THROWS_AS(check_fasenmyer_expansions(3, 1), DomainError);
  CHECK_THROWS_AS(check_fasenmyer_expansions(1, 3), DomainError);
}

TEST_CASE("solve_phi recovers the contiguous relation") {
  // Frozen from an independent symbolic nullspace computation:
  // phi = (0, -1, 1, n+rho, -n, 0) on the whole grid.
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned rho = 2; rho <= 5; ++rho) {
      CAPTURE(n);
      CAPTURE(rho);
      const PhiVector phi = solve_phi(n, rho);
      CHECK(phi.nullity == 1);
      CHECK(phi.coefficient_nullity == (n == 2 ? 2u : 1u));
      CHECK(phi.used_term_rows == (n == 2));
      CHECK(phi[1] == q(0));
      CHECK(phi[2] == q(-1));
      CHECK(phi[3] == q(1));
      CHECK(phi[4] == q(n + rho));
      CHECK(phi[5] == q(-static_cast<long>(n)));
      CHECK(phi[6] == q(0));
      CHECK((phi[1] + phi[2] + phi[3] + phi[6]).is_zero());
      CHECK(residual_recurrence_u(n, rho, phi).is_zero());

      // The solved phi also annihilates I_{n,k} identically in k.
      const auto pieces = term_polynomials(n, rho);
      Polynomial combined;
      for (std::size_t i = 0; i < 6; ++i) combined += pieces[i] * phi.phi[i];
      CHECK(combined.is_zero());
    }
  }
  CHECK_THROWS_AS(solve_phi(1, 3), DomainError);
  CHECK_THROWS_AS(solve_phi(4, 1), DomainError);
}

TEST_CASE("printed phi formulas") {
  const PhiVector p = phi_closed(2, 2);
  CHECK(p[2] == q(0));
  CHECK(p[1] == q(-3, 2));
  CHECK(p[6] == q(1, 2));
  CHECK(p[3] == q(1));
  CHECK(p[4] == q(4));
  CHECK(p[5] == q(-1));
  // Same printed formulas at (3, 2), evaluated independently.
  const PhiVector p32 = phi_closed(3, 2);
  CHECK(p32[1] == q(-29, 12));
  CHECK(p32[2] == q(1, 4));
  CHECK(p32[6] == q(7, 6));
  // The printed values do not annihilate R_n.
  CHECK_FALSE(residual_recurrence_u(2, 2, p).is_zero());
}

TEST_CASE("y recurrence") {
  CHECK(residual_recurrence_y(2, 2, PhiSource::solved).is_zero());
  CHECK(residual_recurrence_y(3, 4, PhiSource::solved).is_zero());
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned rho = 2; rho <= 5; ++rho) {
      CAPTURE(n);
      CAPTURE(rho);
      CHECK(residual_recurrence_y(n, rho, PhiSource::solved).is_zero());
      // The printed y recurrence is the image of the printed u-relation.
      const PhiVector printed = phi_closed(n, rho);
      const Polynomial mapped = u_residual_to_y(residual_recurrence_u(n, rho, printed), n, rho);
      CHECK(residual_recurrence_y(n, rho, PhiSource::printed) == mapped);
      CHECK(recurrence_y_relation(n, rho, printed) == mapped);
    }
  }
  CHECK_FALSE(residual_recurrence_y(2, 2, PhiSource::printed).is_zero());
  CHECK_THROWS_AS(residual_recurrence_y(3, 1, PhiSource::solved), DomainError);
  CHECK_THROWS_AS(residual_recurrence_y(1, 3, PhiSource::printed), DomainError);
}

TEST_CASE("incomplete gamma representation") {
  CHECK(check_incomplete_gamma(0, 1.0, 1e-10).passed());
  CHECK(check_incomplete_gamma(1, 0.5, 1e-10).passed());
  CHECK(check_incomplete_gamma(5, 2.0, 1e-8).passed());
  CHECK(incomplete_gamma_quadrature(0, 1.0, 1e-10).value == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(incomplete_gamma_quadrature(1, 0.5, 1e-10).value == doctest::Approx(-1.5).epsilon(1e-10));
  for (unsigned n = 0; n <= 8; ++n) {
    for (double a : {0.5, 1.0, 2.0}) {
      const GammaQuadrature quad = incomplete_gamma_quadrature(n, a, 1e-8);
      CHECK(quad.converged);
      CHECK(std::abs(quad.value - gamma_closed_form(n, a)) <= 1e-8 * std::abs(gamma_closed_form(n, a)));
      const CheckReport r = check_incomplete_gamma(n, a, 1e-8);
      CHECK(r.passed());
      REQUIRE(r.numeric_error.has_value());
      CHECK(*r.numeric_error <= 1e-8);
    }
  }
  CHECK_THROWS_AS(check_incomplete_gamma(2, 0.0, 1e-8), DomainError);
  CHECK_THROWS_AS(check_incomplete_gamma(2, -1.0, 1e-8), DomainError);
}

TEST_CASE("run_all over small grids") {
  const auto reports = run_all(5, 3);
  CHECK(all_mandatory_pass(reports));
  bool saw_na = false;
  bool saw_advisory = false;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::pass && r.residual) CHECK(r.residual->is_zero());
    saw_na = saw_na || r.status == CheckStatus::not_applicable;
    saw_advisory = saw_advisory || r.advisory;
  }
  CHECK(saw_na);
  CHECK(saw_advisory);

  const auto degenerate = run_all(0, 1);
  CHECK(all_mandatory_pass(degenerate));
  for (const auto& r : degenerate) {
    if (r.check_name.rfind("recurrence.", 0) == 0 || r.check_name.rfind("fidelity.phi", 0) == 0)
      CHECK(r.status == CheckStatus::not_applicable);
  }
}

TEST_CASE("run_all is deterministic and sorted") {
  RunOptions serial{6, 3, Suite::all, false};
  RunOptions parallel{6, 3, Suite::all, true};
  const auto a = run_all(serial);
  const auto b = run_all(parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check_name == b[i].check_name);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].status == b[i].status);
  }
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].check_name <= a[i].check_name);
}

TEST_CASE("suites select their checks") {
  for (const auto& r : run_all(RunOptions{4, 2, Suite::gamma}))
    CHECK(r.check_name.rfind("gamma.", 0) == 0);
  for (const auto& r : run_all(RunOptions{4, 2, Suite::fidelity})) CHECK(r.advisory);
  CHECK(parse_suite("recurrence") == Suite::recurrence);
  CHECK_THROWS_AS(parse_suite("everything"), DomainError);
}

TEST_CASE("a planted failure is reported, not thrown") {
  // A mandatory report with a nonzero residual must count as blocking.
  CheckReport r;
  r.check_name = "planted";
  r.status = CheckStatus::fail;
  CHECK(r.blocking());
  CHECK_FALSE(all_mandatory_pass({r}));
  r.advisory = true;
  r.status = CheckStatus::advisory_fail;
  CHECK_FALSE(r.blocking());
  CHECK(all_mandatory_pass({r}));
}
