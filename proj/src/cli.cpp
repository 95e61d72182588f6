#include "hsop/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsop/errors.hpp"
#include "hsop/sobolev.hpp"

namespace hsop::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string latex_rational(const Rational& magnitude) {
  if (magnitude.is_integer()) return magnitude.numerator_string();
  return "\\frac{" + magnitude.numerator_string() + "}{" + magnitude.denominator_string() + "}";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_string(const CheckReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Tally {
  std::size_t pass = 0, fail = 0, advisory_fail = 0, not_applicable = 0;
  bool advisory = false;
};

std::map<std::string, Tally> tally(const std::vector<CheckReport>& reports) {
  std::map<std::string, Tally> out;
  for (const auto& r : reports) {
    Tally& t = out[r.check_name];
    t.advisory = r.advisory;
    switch (r.status) {
      case CheckStatus::pass: ++t.pass; break;
      case CheckStatus::fail: ++t.fail; break;
      case CheckStatus::advisory_fail: ++t.advisory_fail; break;
      case CheckStatus::not_applicable: ++t.not_applicable; break;
    }
  }
  return out;
}

ordered_json residual_json(const Polynomial& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back({{"num", c.numerator_string()}, {"den", c.denominator_string()}});
  return coeffs;
}

std::string render_reports_text(const std::vector<CheckReport>& reports, const RunOptions& options) {
  std::ostringstream os;
  os << "verify n_max=" << options.n_max << " rho_max=" << options.rho_max << " suite=" << to_string(options.suite)
     << "\n\n";
  const auto counts = tally(reports);
  std::size_t width = 0;
  for (const auto& [name, t] : counts) width = std::max(width, name.size());
  os << "Check families:\n";
  for (const auto& [name, t] : counts) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << name << "  pass=" << t.pass;
    if (t.advisory) os << " advisory_fail=" << t.advisory_fail;
    else os << " fail=" << t.fail;
    os << " n/a=" << t.not_applicable << (t.advisory ? "  (advisory)" : "") << "\n";
  }

  std::size_t blocking = 0;
  for (const auto& r : reports) blocking += r.blocking() ? 1 : 0;
  if (blocking > 0) {
    os << "\nMandatory failures:\n";
    for (const auto& r : reports)
      if (r.blocking()) os << "  " << r.check_name << " [" << params_string(r) << "] " << r.detail << "\n";
  }

  bool any_advisory = false;
  for (const auto& r : reports) {
    if (!r.advisory || r.status == CheckStatus::not_applicable) continue;
    if (!any_advisory) os << "\nFidelity report (advisory, printed formulas vs exact results):\n";
    any_advisory = true;
    os << "  " << r.check_name << " [" << params_string(r) << "] " << to_string(r.status);
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }

  os << "\nMandatory checks: " << (blocking == 0 ? "PASS" : "FAIL") << " (" << reports.size() << " reports, "
     << blocking << " mandatory failures)\n";
  return os.str();
}

std::string render_reports_json(const std::vector<CheckReport>& reports, const RunOptions& options) {
  ordered_json doc;
  doc["n_max"] = options.n_max;
  doc["rho_max"] = options.rho_max;
  doc["suite"] = std::string(to_string(options.suite));
  doc["mandatory_pass"] = all_mandatory_pass(reports);
  ordered_json summary = ordered_json::object();
  for (const auto& [name, t] : tally(reports)) {
    summary[name] = {{"advisory", t.advisory},       {"pass", t.pass},
                     {"fail", t.fail},               {"advisory_fail", t.advisory_fail},
                     {"not_applicable", t.not_applicable}};
  }
  doc["summary"] = std::move(summary);
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json item;
    item["check"] = r.check_name;
    item["params"] = r.params;
    item["status"] = std::string(to_string(r.status));
    item["advisory"] = r.advisory;
    item["residual"] = r.residual ? residual_json(*r.residual) : ordered_json(nullptr);
    item["numeric_error"] = r.numeric_error ? ordered_json(*r.numeric_error) : ordered_json(nullptr);
    item["detail"] = r.detail;
    list.push_back(std::move(item));
  }
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string render_reports_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "check,params,status,advisory,numeric_error,detail\n";
  for (const auto& r : reports) {
    os << r.check_name << "," << csv_quote(params_string(r)) << "," << to_string(r.status) << ","
       << (r.advisory ? "true" : "false") << "," << (r.numeric_error ? format_double(*r.numeric_error) : "") << ","
       << csv_quote(r.detail) << "\n";
  }
  return os.str();
}

std::string render_reports_latex(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "\\begin{tabular}{lrrrr}\n"
     << "check & pass & fail & advisory & n/a \\\\\n\\hline\n";
  for (const auto& [name, t] : tally(reports)) {
    std::string escaped;
    for (char c : name) {
      if (c == '_') escaped += "\\_";
      else escaped += c;
    }
    os << "\\texttt{" << escaped << "} & " << t.pass << " & " << t.fail << " & " << t.advisory_fail << " & "
       << t.not_applicable << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitUsage;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::latex: return "latex";
    case OutputFormat::text: return "text";
  }
  return "?";
}

OutputFormat parse_format(std::string_view text) {
  for (auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::latex, OutputFormat::text})
    if (to_string(f) == text) return f;
  throw DomainError("unknown output format '" + std::string(text) + "'");
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = c.abs();
    if (i == 0) {
      out += latex_rational(mag);
      continue;
    }
    if (mag != Rational(1)) out += latex_rational(mag);
    out += "x";
    if (i > 1) out += "^{" + std::to_string(i) + "}";
  }
  return out;
}

std::string render_polynomial(const Polynomial& p, const FamilySpec& spec, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = spec.n();
      doc["rho"] = spec.rho();
      doc["scaling"] = std::string(to_string(spec.scaling()));
      doc["coeffs"] = residual_json(p);
      return doc.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::string out;
      for (const auto& c : p.coeffs()) out += c.numerator_string() + "," + c.denominator_string() + "\n";
      return out;
    }
    case OutputFormat::latex:
      return latex_polynomial(p) + "\n";
    case OutputFormat::text:
      return "y_" + std::to_string(spec.n()) + "(" + std::to_string(spec.rho()) + "; x) = " + to_string(p) + "\n";
  }
  return {};
}

GenDocument parse_gen_json(std::string_view document) {
  try {
    const auto doc = nlohmann::json::parse(document);
    const auto n = doc.at("n").get<unsigned>();
    const auto rho = doc.at("rho").get<unsigned>();
    const Scaling scaling = parse_scaling(doc.at("scaling").get<std::string>());
    std::vector<Rational> coeffs;
    for (const auto& c : doc.at("coeffs")) {
      coeffs.push_back(Rational::parse(c.at("num").get<std::string>(), c.at("den").get<std::string>()));
    }
    return {FamilySpec(n, rho, scaling), Polynomial(std::move(coeffs))};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed gen document: ") + e.what());
  }
}

std::string render_gram(const RationalMatrix& g, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 0; r < g.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c).to_string());
        rows.push_back(std::move(row));
      }
      os << rows.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) os << (c ? "," : "") << g(r, c).to_string();
        os << "\n";
      }
      break;
    case OutputFormat::latex:
      os << "\\begin{pmatrix}\n";
      for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
          const Rational& v = g(r, c);
          os << (c ? " & " : "") << (v.sign() < 0 ? "-" : "") << latex_rational(v.abs());
        }
        os << (r + 1 < g.rows() ? " \\\\\n" : "\n");
      }
      os << "\\end{pmatrix}\n";
      break;
    case OutputFormat::text: {
      std::size_t width = 1;
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) width = std::max(width, g(r, c).to_string().size());
      for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c)
          os << (c ? "  " : "") << std::setw(static_cast<int>(width)) << g(r, c).to_string();
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string render_reports(const std::vector<CheckReport>& reports, const RunOptions& options, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return render_reports_json(reports, options);
    case OutputFormat::csv: return render_reports_csv(reports);
    case OutputFormat::latex: return render_reports_latex(reports);
    case OutputFormat::text: return render_reports_text(reports, options);
  }
  return {};
}

std::string render_value(const ComplexPoint& z) {
  const auto part = [](double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::string(buf);
  };
  return part(z.re()) + "," + part(z.im());
}

ComplexPoint parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError("expected RE,IM but got '" + std::string(text) + "'");
  const auto parse_part = [&](std::string_view part) {
    const std::string s(part);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw DomainError("not a number: '" + s + "'");
    return v;
  };
  return ComplexPoint(parse_part(text.substr(0, comma)), parse_part(text.substr(comma + 1)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generation and verification of hypergeometric Sobolev orthogonal polynomials on the unit circle",
               "hsop"};
  app.require_subcommand(1);

  const std::vector<std::string> scalings = {"hypergeometric", "ode"};
  const std::vector<std::string> formats = {"json", "csv", "latex", "text"};
  const std::vector<std::string> suites = {"all", "ode", "recurrence", "gram", "gamma", "fidelity"};

  int n = 0;
  int rho = 1;
  int n_max = 12;
  int rho_max = 5;
  std::string scaling = "hypergeometric";
  std::string format;
  std::string suite = "all";
  std::string at;
  bool parallel = false;

  auto* gen = app.add_subcommand("gen", "Exact coefficients of y_n(rho; x)");
  gen->add_option("--n", n, "Degree n")->required()->check(CLI::Range(0, 10000));
  gen->add_option("--rho", rho, "Parameter rho")->required()->check(CLI::Range(1, 10000));
  gen->add_option("--scaling", scaling, "Normalization")->check(CLI::IsMember(scalings));
  gen->add_option("--format", format, "Output format (default json)")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--n-max", n_max, "Largest degree on the grid")->check(CLI::Range(0, 10000));
  verify->add_option("--rho-max", rho_max, "Largest rho on the grid")->check(CLI::Range(1, 10000));
  verify->add_option("--suite", suite, "Which checks to run")->check(CLI::IsMember(suites));
  verify->add_option("--format", format, "Output format (default text)")->check(CLI::IsMember(formats));
  verify->add_flag("--parallel", parallel, "Run grid points on all hardware threads");

  auto* gram_cmd = app.add_subcommand("gram", "Exact Sobolev Gram matrix of y_0..y_{n_max}");
  gram_cmd->add_option("--n-max", n_max, "Largest degree")->required()->check(CLI::Range(0, 10000));
  gram_cmd->add_option("--rho", rho, "Parameter rho")->required()->check(CLI::Range(1, 10000));
  gram_cmd->add_option("--scaling", scaling, "Normalization")->check(CLI::IsMember(scalings));
  gram_cmd->add_option("--format", format, "Output format (default json)")->check(CLI::IsMember(formats));
  gram_cmd->add_flag("--parallel", parallel, "Compute rows on all hardware threads");

  auto* eval = app.add_subcommand("eval", "Evaluate y_n(rho; z) in double precision");
  eval->add_option("--n", n, "Degree n")->required()->check(CLI::Range(0, 10000));
  eval->add_option("--rho", rho, "Parameter rho")->required()->check(CLI::Range(1, 10000));
  eval->add_option("--scaling", scaling, "Normalization")->check(CLI::IsMember(scalings));
  eval->add_option("--at", at, "Evaluation point RE,IM")->required();

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const FamilySpec spec(static_cast<unsigned>(n), static_cast<unsigned>(rho), parse_scaling(scaling));
      out << render_polynomial(gen_y(spec), spec, format.empty() ? OutputFormat::json : parse_format(format));
      return kExitOk;
    }
    if (*gram_cmd) {
      const RationalMatrix g = gram(static_cast<unsigned>(n_max), static_cast<unsigned>(rho), parse_scaling(scaling), parallel);
      out << render_gram(g, format.empty() ? OutputFormat::json : parse_format(format));
      return kExitOk;
    }
    if (*eval) {
      const ComplexPoint z = parse_complex(at);
      const FamilySpec spec(static_cast<unsigned>(n), static_cast<unsigned>(rho), parse_scaling(scaling));
      out << render_value(eval_complex(gen_y(spec), z)) << "\n";
      return kExitOk;
    }
    if (*verify) {
      const RunOptions options{static_cast<unsigned>(n_max), static_cast<unsigned>(rho_max), parse_suite(suite),
                               parallel};
      const auto reports = run_all(options);
      out << render_reports(reports, options, format.empty() ? OutputFormat::text : parse_format(format));
      const bool ok = all_mandatory_pass(reports);
      if (!ok) err << "mandatory checks failed\n";
      return ok ? kExitOk : kExitCheckFailure;
    }
  } catch (const DomainError& e) {
    return usage_error(err, e.what());
  } catch (const NumericRangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return usage_error(err, "no command given");
}

}  // namespace hsop::cli
