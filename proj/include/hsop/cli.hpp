#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hsop/complex_point.hpp"
#include "hsop/family.hpp"
#include "hsop/matrix.hpp"
#include "hsop/polynomial.hpp"
#include "hsop/verify.hpp"

namespace hsop::cli {

enum class OutputFormat { json, csv, latex, text };

std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// gen output. JSON schema:
///   {"n": int, "rho": int, "scaling": "hypergeometric"|"ode",
///    "coeffs": [{"num": str, "den": str}, ...]}   (coeffs[i] multiplies x^i)
/// CSV is one "num,den" row per coefficient, lowest degree first.
std::string render_polynomial(const Polynomial& p, const FamilySpec& spec, OutputFormat format);

/// A display-math fragment such as "3 + 2x + \frac{1}{2}x^{2}".
std::string latex_polynomial(const Polynomial& p);

struct GenDocument {
  FamilySpec spec;
  Polynomial polynomial;
};

/// Inverse of the JSON form of render_polynomial. Throws DomainError on
/// malformed documents.
GenDocument parse_gen_json(std::string_view document);

std::string render_gram(const RationalMatrix& g, OutputFormat format);

std::string render_reports(const std::vector<CheckReport>& reports, const RunOptions& options, OutputFormat format);

/// "re,im" with 15 significant digits; negative zero prints as 0.
std::string render_value(const ComplexPoint& z);

/// Parses "RE,IM". Throws DomainError on malformed input.
ComplexPoint parse_complex(std::string_view text);

/// Runs one command line (without the program name). Structured output goes
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsop::cli
