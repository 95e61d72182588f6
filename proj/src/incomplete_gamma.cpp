#include <cmath>
#include <sstream>

#include "hsop/errors.hpp"
#include "hsop/verify.hpp"

namespace hsop {

namespace {

constexpr std::size_t kMaxSubintervals = std::size_t{1} << 24;
constexpr double kMaxTailLength = 1.0e4;

double simpson(unsigned n, double a, double b, std::size_t m) {
  const double h = (b - a) / static_cast<double>(m);
  const auto f = [&](double x) { return std::exp(a - x) * std::pow(x, static_cast<double>(n)); };
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    const double v = f(a + h * static_cast<double>(i));
    (i % 2 == 1 ? odd : even) += v;
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace

GammaQuadrature incomplete_gamma_quadrature(unsigned n, double a, double tol) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("incomplete gamma check needs a finite a > 0");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double nd = n;

  // e^a * integral_a^{a+1} e^-x x^n dx >= e^-1 ((a+1)^(n+1) - a^(n+1)) / (n+1)
  const double lower = std::exp(-1.0) * (std::pow(a + 1.0, nd + 1.0) - std::pow(a, nd + 1.0)) / (nd + 1.0);
  const double target = std::log(tol / 10.0 * lower);

  // For a+T > 2n: e^a * integral_{a+T}^inf e^-x x^n dx <= e^-T (a+T)^n (n+1).
  double length = std::max(1.0, 2.0 * nd + 1.0 - a);
  const auto log_tail = [&](double t) { return -t + nd * std::log(a + t) + std::log(nd + 1.0); };
  while (log_tail(length) >= target && length < kMaxTailLength) length += 1.0;

  GammaQuadrature out;
  out.upper_limit = a + length;
  if (log_tail(length) >= target) return out;

  std::size_t m = 16;
  double previous = simpson(n, a, out.upper_limit, m);
  while (m < kMaxSubintervals) {
    m *= 2;
    const double current = simpson(n, a, out.upper_limit, m);
    const bool settled = std::abs(current - previous) < tol / 10.0 * std::abs(current);
    previous = current;
    if (settled) {
      out.converged = true;
      break;
    }
  }
  out.value = -previous;
  out.subintervals = m;
  return out;
}

CheckReport check_incomplete_gamma(unsigned n, double a, double tol) {
  CheckReport report;
  report.check_name = "gamma.incomplete_gamma";
  report.params = {{"n", static_cast<long>(n)}, {"rho", 1}, {"a_milli", std::lround(a * 1000.0)}};

  const GammaQuadrature quad = incomplete_gamma_quadrature(n, a, tol);
  const double exact = gen_y_ode(n, 1).eval(Rational::from_double(a)).to_double();

  std::ostringstream detail;
  detail.precision(17);
  if (!quad.converged) {
    report.status = CheckStatus::fail;
    detail << "quadrature did not converge (upper limit " << quad.upper_limit << ", " << quad.subintervals
           << " subintervals)";
    report.detail = detail.str();
    return report;
  }
  const double error = std::abs(quad.value - exact) / std::abs(exact);
  report.numeric_error = error;
  report.status = error <= tol ? CheckStatus::pass : CheckStatus::fail;
  detail << "quadrature " << quad.value << " vs polynomial " << exact << " (tol " << tol << ")";
  report.detail = detail.str();
  return report;
}

}  // namespace hsop
