#include "hsop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <tuple>

#include "hsop/errors.hpp"
#include "hsop/parallel.hpp"
#include "hsop/sobolev.hpp"

namespace hsop {

namespace {

constexpr double kGammaTolerance = 1e-8;
constexpr double kQuadratureTolerance = 1e-10;
constexpr std::array<double, 3> kGammaPoints = {0.5, 1.0, 2.0};

using Params = std::map<std::string, long>;

Params point(unsigned n, unsigned rho) { return {{"n", static_cast<long>(n)}, {"rho", static_cast<long>(rho)}}; }

CheckReport exact_report(std::string name, Params params, Polynomial residual, bool advisory = false) {
  CheckReport report;
  report.check_name = std::move(name);
  report.params = std::move(params);
  report.advisory = advisory;
  report.status = residual.is_zero() ? CheckStatus::pass : (advisory ? CheckStatus::advisory_fail : CheckStatus::fail);
  if (!residual.is_zero()) report.detail = "residual " + to_string(residual);
  report.residual = std::move(residual);
  return report;
}

CheckReport verdict_report(std::string name, Params params, bool ok, std::string detail, bool advisory = false) {
  CheckReport report;
  report.check_name = std::move(name);
  report.params = std::move(params);
  report.advisory = advisory;
  report.status = ok ? CheckStatus::pass : (advisory ? CheckStatus::advisory_fail : CheckStatus::fail);
  report.detail = std::move(detail);
  return report;
}

CheckReport not_applicable(std::string name, Params params, bool advisory, std::string why) {
  CheckReport report;
  report.check_name = std::move(name);
  report.params = std::move(params);
  report.advisory = advisory;
  report.status = CheckStatus::not_applicable;
  report.detail = std::move(why);
  return report;
}

std::string scaled_name(std::string_view base, Scaling scaling) {
  return std::string(base) + "/" + std::string(to_string(scaling));
}

std::string join_phi(const PhiVector& phi) {
  std::string out = "(";
  for (std::size_t i = 0; i < 6; ++i) out += (i ? ", " : "") + phi.phi[i].to_string();
  return out + ")";
}

// --- ode suite -------------------------------------------------------------

void ode_checks(unsigned n, unsigned rho, std::vector<CheckReport>& out) {
  const Polynomial closed = gen_y(n, rho, Scaling::hypergeometric);
  const Polynomial closed_ode = closed * factorial(n);

  {
    Polynomial toeplitz_diff = gen_y_toeplitz(n, rho) - closed;
    Polynomial ode_diff = gen_y_ode(n, rho) - closed_ode;
    CheckReport r = exact_report("ode.generator_agreement", point(n, rho), toeplitz_diff.is_zero() ? ode_diff : toeplitz_diff);
    if (!r.passed()) r.detail = (toeplitz_diff.is_zero() ? "triangular solve: " : "Toeplitz power: ") + r.detail;
    out.push_back(std::move(r));
  }
  out.push_back(exact_report("ode.hypergeometric_representation", point(n, rho), gen_y_from_2f0(n, rho) - closed));
  {
    const Rational expected = sign_power(rho) / factorial(n);
    const bool ok = closed.degree() == std::optional<std::size_t>(n) && closed.leading() == expected;
    out.push_back(verdict_report("ode.leading_coefficient", point(n, rho), ok,
                                 "leading " + closed.leading().to_string() + ", expected " + expected.to_string()));
  }
  out.push_back(exact_report("ode.operator_image/ode", point(n, rho),
                             apply_L(rho, gen_y_ode(n, rho)) - Polynomial::monomial(Rational(1), n)));
  out.push_back(exact_report("ode.operator_image/hypergeometric", point(n, rho),
                             apply_L(rho, closed) - Polynomial::monomial(factorial(n).inverse(), n)));
  for (Scaling s : {Scaling::hypergeometric, Scaling::ode}) {
    out.push_back(exact_report(scaled_name("ode.high_order", s), point(n, rho), residual_ode_high(n, rho, s)));
    out.push_back(exact_report(scaled_name("ode.second_order", s), point(n, rho), residual_ode_second(n, rho, s)));
  }
  out.push_back(exact_report("ode.u_equation", point(n, rho), residual_u_ode(n, rho)));
  out.push_back(check_u_y_relation(n, rho));
  out.push_back(check_step_rho(n, rho));
  if (n == 1) {
    const Rational root = linear_root(closed).value();
    const bool on_circle = root.abs() == Rational(1);
    const bool ok = root == -Rational(static_cast<long>(rho)) && on_circle == (rho == 1);
    out.push_back(verdict_report("ode.y1_root", point(n, rho), ok,
                                 "root " + root.to_string() + (on_circle ? " on" : " off") + " the unit circle"));
  }
}

// --- gram suite ------------------------------------------------------------

std::string first_mismatch(const RationalMatrix& got, const RationalMatrix& want) {
  for (std::size_t r = 0; r < got.rows(); ++r)
    for (std::size_t c = 0; c < got.cols(); ++c)
      if (got(r, c) != want(r, c))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + got(r, c).to_string() +
               ", expected " + want(r, c).to_string();
  return {};
}

RationalMatrix expected_gram(unsigned n_max, Scaling scaling) {
  RationalMatrix want(n_max + 1, n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational f = factorial(n);
    want(n, n) = scaling == Scaling::ode ? Rational(1) : (f * f).inverse();
  }
  return want;
}

void gram_checks(unsigned n_max, unsigned rho, bool parallel, std::vector<CheckReport>& out, bool fidelity_only) {
  const Params params = {{"n_max", static_cast<long>(n_max)}, {"rho", static_cast<long>(rho)}};
  const RationalMatrix hyper = gram(n_max, rho, Scaling::hypergeometric, parallel);

  if (fidelity_only) {
    const RationalMatrix identity = RationalMatrix::identity(n_max + 1);
    const std::string mismatch = first_mismatch(hyper, identity);
    out.push_back(verdict_report("fidelity.gram_delta/hypergeometric", params, mismatch.empty(),
                                 mismatch.empty() ? "Gram matrix is the identity"
                                                  : "not the identity: " + mismatch + " (diagonal is 1/(n!)^2)",
                                 true));
    return;
  }

  for (Scaling s : {Scaling::ode, Scaling::hypergeometric}) {
    const RationalMatrix g = s == Scaling::ode ? gram(n_max, rho, s, parallel) : hyper;
    const std::string mismatch = first_mismatch(g, expected_gram(n_max, s));
    out.push_back(verdict_report(scaled_name("gram.diagonal", s), params, mismatch.empty(),
                                 mismatch.empty() ? (s == Scaling::ode ? "identity" : "diag(1/(n!)^2)") : mismatch));
  }

  {
    const SobolevForm form(rho);
    const auto& w = form.generator();
    bool ok = form.matrix().is_symmetric();
    for (std::size_t l = 0; l <= rho; ++l)
      for (std::size_t j = 0; j <= rho; ++j) ok = ok && form.matrix()(l, j) == w[l] * w[j];
    std::string detail = ok ? "M = w w^T" : "M differs from w w^T";
    for (unsigned n = 0; n <= n_max && ok; ++n) {
      const Polynomial ln = apply_L(rho, gen_y(n, rho));
      for (unsigned m = 0; m <= n_max; ++m) {
        if (hyper(n, m) != circle_inner(ln, apply_L(rho, gen_y(m, rho)))) {
          ok = false;
          detail = "factorization fails at (" + std::to_string(n) + "," + std::to_string(m) + ")";
          break;
        }
      }
    }
    out.push_back(verdict_report("gram.rank_one_factorization", params, ok, detail));
  }

  {
    double worst = 0.0;
    for (unsigned n = 0; n <= n_max; ++n) {
      const Polynomial yn = gen_y(n, rho);
      for (unsigned m = 0; m <= n_max; ++m) {
        const Polynomial ym = gen_y(m, rho);
        const double exact = circle_inner(yn, ym).to_double();
        const ComplexPoint quad = circle_inner_quadrature(yn, ym, 2 * std::max(n, m) + 1);
        const double err = std::abs(quad.value() - std::complex<double>(exact, 0.0)) / (1.0 + std::abs(exact));
        worst = std::max(worst, err);
      }
    }
    CheckReport r = verdict_report("gram.quadrature", params, worst <= kQuadratureTolerance,
                                   "max |quadrature - exact| / (1 + |exact|) over y_n pairs");
    r.numeric_error = worst;
    out.push_back(std::move(r));
  }
}

// --- recurrence and fidelity suites ---------------------------------------

const std::array<const char*, 5> kRecurrenceNames = {"recurrence.fasenmyer_expansions", "recurrence.solve_phi",
                                                     "recurrence.u_relation", "recurrence.y_relation",
                                                     "recurrence.y_transform"};
const std::array<const char*, 4> kFidelityNames = {"fidelity.phi_printed", "fidelity.printed_equations",
                                                   "fidelity.y_recurrence_printed", "fidelity.u_relation_printed"};

std::string applicability(unsigned n, unsigned rho) {
  return n < 2 ? "needs n >= 2" : (rho < 2 ? "needs rho >= 2" : "");
}

void recurrence_checks(unsigned n, unsigned rho, std::vector<CheckReport>& out) {
  if (const std::string why = applicability(n, rho); !why.empty()) {
    for (const char* name : kRecurrenceNames) out.push_back(not_applicable(name, point(n, rho), false, why));
    return;
  }
  out.push_back(check_fasenmyer_expansions(n, rho));

  try {
    const PhiVector phi = solve_phi(n, rho);
    const Rational nr(static_cast<long>(n + rho));
    const bool normalized = phi[3] == Rational(1) && phi[4] == nr &&
                            (phi[1] + phi[2] + phi[3] + phi[6]).is_zero() && phi.nullity == 1;
    const Polynomial residual = residual_recurrence_u(n, rho, phi);
    CheckReport r = verdict_report("recurrence.solve_phi", point(n, rho), normalized && residual.is_zero(),
                                   "phi = " + join_phi(phi) + ", nullity " + std::to_string(phi.nullity) +
                                       " (coefficient matrix alone: " + std::to_string(phi.coefficient_nullity) +
                                       ")");
    r.residual = residual;
    out.push_back(std::move(r));
    out.push_back(exact_report("recurrence.u_relation", point(n, rho), residual));
    out.push_back(exact_report("recurrence.y_relation", point(n, rho), recurrence_y_relation(n, rho, phi)));
  } catch (const NullspaceError& e) {
    for (const char* name : {"recurrence.solve_phi", "recurrence.u_relation", "recurrence.y_relation"})
      out.push_back(verdict_report(name, point(n, rho), false, e.what()));
  }

  // The printed phi give a nonzero u-residual, so this exercises the
  // u -> y transformation on nontrivial input.
  const PhiVector printed = phi_closed(n, rho);
  const Polynomial transformed = u_residual_to_y(residual_recurrence_u(n, rho, printed), n, rho);
  Polynomial diff = residual_recurrence_y(n, rho, PhiSource::printed) - transformed;
  if (diff.is_zero()) diff = recurrence_y_relation(n, rho, printed) - transformed;
  out.push_back(exact_report("recurrence.y_transform", point(n, rho), diff));
}

void fidelity_checks(unsigned n, unsigned rho, std::vector<CheckReport>& out) {
  if (const std::string why = applicability(n, rho); !why.empty()) {
    for (const char* name : kFidelityNames) out.push_back(not_applicable(name, point(n, rho), true, why));
    return;
  }
  const PhiVector printed = phi_closed(n, rho);
  std::optional<PhiVector> solved;
  std::string solve_error;
  try {
    solved = solve_phi(n, rho);
  } catch (const NullspaceError& e) {
    solve_error = e.what();
  }

  if (solved) {
    std::string detail;
    bool all = true;
    for (std::size_t i = 1; i <= 6; ++i) {
      const bool same = printed[i] == (*solved)[i];
      all = all && same;
      detail += (i > 1 ? "; " : "") + std::string("phi") + std::to_string(i) + (same ? " = " : " printed ") +
                printed[i].to_string() + (same ? "" : " vs solved " + (*solved)[i].to_string());
    }
    out.push_back(verdict_report("fidelity.phi_printed", point(n, rho), all, detail, true));

    // The five printed linear conditions on phi, evaluated at the solved vector.
    const PhiVector& p = *solved;
    const Rational nn(static_cast<long>(n));
    const Rational r(static_cast<long>(rho));
    const Rational one(1);
    const Rational two(2);
    const std::array<std::pair<const char*, Rational>, 5> equations = {{
        {"phi5 = -phi4/(n+rho)", p[5] + p[4] / (nn + r)},
        {"phi3 = phi4/(n+rho)", p[3] - p[4] / (nn + r)},
        {"phi2 condition at k=n", p[2] * (r + nn - one) + p[3] * (nn + one) * (r + nn - one) - p[4] * nn - p[5]},
        {"phi1 condition at k=n-1", p[1] * two * (r + nn - two) + p[2] * two * nn * (r + nn - two) +
                                        p[3] * nn * (nn + one) * (r + nn - two) - p[4] * (nn - one) * nn -
                                        p[5] * two * (nn - one)},
        {"phi1+phi2+phi3+phi6 = 0", p[1] + p[2] + p[3] + p[6]},
    }};
    std::string eq_detail;
    bool eq_all = true;
    for (const auto& [label, value] : equations) {
      eq_all = eq_all && value.is_zero();
      eq_detail += std::string(eq_detail.empty() ? "" : "; ") + label + (value.is_zero() ? ": holds" : ": off by " + value.to_string());
    }
    out.push_back(verdict_report("fidelity.printed_equations", point(n, rho), eq_all, eq_detail, true));
  } else {
    out.push_back(verdict_report("fidelity.phi_printed", point(n, rho), false, solve_error, true));
    out.push_back(verdict_report("fidelity.printed_equations", point(n, rho), false, solve_error, true));
  }

  out.push_back(exact_report("fidelity.y_recurrence_printed", point(n, rho),
                             residual_recurrence_y(n, rho, PhiSource::printed), true));
  out.push_back(exact_report("fidelity.u_relation_printed", point(n, rho),
                             residual_recurrence_u(n, rho, printed), true));
}

bool includes(Suite selected, Suite part) { return selected == Suite::all || selected == part; }

long param_or(const CheckReport& r, const char* key) {
  const auto it = r.params.find(key);
  return it == r.params.end() ? -1 : it->second;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::advisory_fail: return "advisory_fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::ode: return "ode";
    case Suite::recurrence: return "recurrence";
    case Suite::gram: return "gram";
    case Suite::gamma: return "gamma";
    case Suite::fidelity: return "fidelity";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::all, Suite::ode, Suite::recurrence, Suite::gram, Suite::gamma, Suite::fidelity})
    if (to_string(s) == text) return s;
  throw DomainError("unknown suite '" + std::string(text) + "'");
}

Polynomial residual_ode_high(unsigned n, unsigned rho, Scaling scaling) {
  return residual_ode_high(gen_y(n, rho, scaling), n, rho);
}

Polynomial residual_ode_high(const Polynomial& y, unsigned n, unsigned rho) {
  const Polynomial image = apply_L(rho, y);
  return derivative(image).shifted(1) - image * Rational(static_cast<long>(n));
}

Polynomial residual_ode_second(unsigned n, unsigned rho, Scaling scaling) {
  return residual_ode_second(gen_y(n, rho, scaling), n, rho);
}

Polynomial residual_ode_second(const Polynomial& y, unsigned n, unsigned rho) {
  const Polynomial dy = derivative(y);
  const Polynomial x_plus = Polynomial({Rational(static_cast<long>(rho) - 1), Rational(1)});
  return derivative(y, 2).shifted(1) - x_plus * dy - (dy - y) * Rational(static_cast<long>(n));
}

Polynomial residual_u_ode(unsigned n, unsigned rho) { return residual_u_ode(gen_u(n, rho), n, rho); }

Polynomial residual_u_ode(const Polynomial& u, unsigned n, unsigned rho) {
  const Polynomial du = derivative(u);
  const Rational nn(static_cast<long>(n));
  const Rational r(static_cast<long>(rho));
  return derivative(u, 2).shifted(2) + du.shifted(1) * (r + Rational(1)) - (du.shifted(1) + u * r) * nn - du;
}

CheckReport check_u_y_relation(unsigned n, unsigned rho) {
  const Polynomial u = gen_u(n, rho);
  const Polynomial y = gen_y(n, rho);
  const Rational scale = factorial(n) * sign_power(n + rho);
  std::vector<Rational> diff(n + 1);
  for (unsigned k = 0; k <= n; ++k) diff[k] = u.coeff(k) - scale * sign_power(n - k) * y.coeff(n - k);
  return exact_report("ode.u_y_relation", point(n, rho), Polynomial(std::move(diff)));
}

CheckReport check_step_rho(unsigned n, unsigned rho) {
  std::vector<Rational> diff(n + 1);
  Rational tail(0);
  for (unsigned k = n + 1; k-- > 0;) {
    tail += coeff_closed(n, k, rho);
    diff[k] = coeff_closed(n, k, rho + 1) + tail;
  }
  return exact_report("ode.step_rho", point(n, rho), Polynomial(std::move(diff)));
}

std::vector<CheckReport> run_all(const RunOptions& options) {
  if (options.rho_max == 0) throw DomainError("rho_max must be at least 1");
  using Task = std::function<void(std::vector<CheckReport>&)>;
  std::vector<Task> tasks;
  const Suite suite = options.suite;

  for (unsigned rho = 1; rho <= options.rho_max; ++rho) {
    for (unsigned n = 0; n <= options.n_max; ++n) {
      if (includes(suite, Suite::ode)) tasks.emplace_back([=](auto& out) { ode_checks(n, rho, out); });
      if (includes(suite, Suite::recurrence)) tasks.emplace_back([=](auto& out) { recurrence_checks(n, rho, out); });
      if (includes(suite, Suite::fidelity)) tasks.emplace_back([=](auto& out) { fidelity_checks(n, rho, out); });
    }
    if (includes(suite, Suite::gram))
      tasks.emplace_back([=](auto& out) { gram_checks(options.n_max, rho, false, out, false); });
    if (includes(suite, Suite::fidelity))
      tasks.emplace_back([=](auto& out) { gram_checks(options.n_max, rho, false, out, true); });
  }
  if (includes(suite, Suite::gamma)) {
    for (unsigned n = 0; n <= options.n_max; ++n)
      for (double a : kGammaPoints)
        tasks.emplace_back([=](auto& out) { out.push_back(check_incomplete_gamma(n, a, kGammaTolerance)); });
  }

  std::vector<std::vector<CheckReport>> partial(tasks.size());
  for_each_index(tasks.size(), options.parallel, [&](std::size_t i) { tasks[i](partial[i]); });

  std::vector<CheckReport> reports;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(reports));
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::forward_as_tuple(a.check_name, param_or(a, "n"), param_or(a, "rho"), a.params) <
           std::forward_as_tuple(b.check_name, param_or(b, "n"), param_or(b, "rho"), b.params);
  });
  return reports;
}

bool all_mandatory_pass(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.blocking(); });
}

}  // namespace hsop
