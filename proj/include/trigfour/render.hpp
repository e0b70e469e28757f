#pragma once

#include <trigfour/expansions.hpp>
#include <trigfour/reciprocal.hpp>
#include <trigfour/verify.hpp>

#include <string>

namespace trigfour {

enum class OutputFormat { Text, Json, Latex, Csv };

/// "text" | "json" | "latex" | "csv".
OutputFormat parse_format(const std::string& name);

/// Doubles rendered with enough digits to round-trip ("%.17g").
std::string format_double(double v);

// Expression bodies (no "lhs =" part; the CLI prepends labels).
// Text conventions: rationals as "p/q", powers as "^", harmonics as
// "cos(kt)"; trig polynomials print harmonics in descending order with the
// constant last, power expansions print exponents ascending.
std::string render_trig_polynomial(const TrigPolynomial& p, OutputFormat f);
std::string render_power_expansion(const PowerExpansion& p, OutputFormat f);

/// "cos(4t)", "sin(t)" (n = 1 drops the coefficient).
std::string harmonic_label(TrigBase base, long n, OutputFormat f);
/// "cos^4(t)"; n = 1 collapses to "cos(t)".
std::string power_label(TrigBase base, long n, OutputFormat f);

// CSV documents (header line + rows).
std::string trig_polynomial_csv(const TrigPolynomial& p);
std::string power_expansion_csv(const PowerExpansion& p);
std::string real_trig_series_csv(const RealTrigSeries& s);
std::string verification_report_csv(const VerificationReport& r);

}  // namespace trigfour
