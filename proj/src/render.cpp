#include <trigfour/render.hpp>

#include <cstdio>
#include <sstream>
#include <vector>

namespace trigfour {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "latex") return OutputFormat::Latex;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string latex_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    std::string sign = r < 0 ? "-" : "";
    return sign + "\\frac{" + abs(r.get_num()).get_str() + "}{" + r.get_den().get_str() + "}";
}

struct Term {
    Rational coeff;
    std::string symbol;  // empty for a constant term
};

// " a + b - c " chain; unit coefficients drop, signs fold into separators.
std::string join_terms(const std::vector<Term>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms) {
        const bool negative = t.coeff < 0;
        Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.symbol.empty()) {
            out += latex ? latex_rational(mag) : rational_to_string(mag);
        } else if (mag == 1) {
            out += t.symbol;
        } else if (latex) {
            out += latex_rational(mag) + t.symbol;
        } else {
            out += rational_to_string(mag) + "*" + t.symbol;
        }
    }
    return out;
}

std::string base_name(TrigBase base) { return base == TrigBase::Cos ? "cos" : "sin"; }

}  // namespace

std::string harmonic_label(TrigBase base, long n, OutputFormat f) {
    const bool latex = f == OutputFormat::Latex;
    std::string fn = (latex ? "\\" : "") + base_name(base);
    std::string arg = n == 1 ? "t" : std::to_string(n) + "t";
    return fn + "(" + arg + ")";
}

std::string power_label(TrigBase base, long n, OutputFormat f) {
    const bool latex = f == OutputFormat::Latex;
    std::string fn = (latex ? "\\" : "") + base_name(base);
    if (n == 1) return fn + "(t)";
    if (latex) return fn + "^{" + std::to_string(n) + "}(t)";
    return fn + "^" + std::to_string(n) + "(t)";
}

std::string render_trig_polynomial(const TrigPolynomial& p, OutputFormat f) {
    std::vector<Term> terms;
    // Descending harmonics, cosine before sine at equal harmonic, constant last.
    auto ci = p.cos_terms().rbegin();
    auto si = p.sin_terms().rbegin();
    while (ci != p.cos_terms().rend() || si != p.sin_terms().rend()) {
        const bool take_cos = si == p.sin_terms().rend() ||
                              (ci != p.cos_terms().rend() && ci->first >= si->first);
        if (take_cos) {
            terms.push_back({ci->second, harmonic_label(TrigBase::Cos, ci->first, f)});
            ++ci;
        } else {
            terms.push_back({si->second, harmonic_label(TrigBase::Sin, si->first, f)});
            ++si;
        }
    }
    if (p.constant_term() != 0 || terms.empty()) terms.push_back({p.constant_term(), ""});
    return join_terms(terms, f == OutputFormat::Latex);
}

std::string render_power_expansion(const PowerExpansion& p, OutputFormat f) {
    const bool latex = f == OutputFormat::Latex;
    std::vector<Term> terms;
    for (const auto& [e, c] : p.coeffs()) {
        std::string sym;
        if (p.cos_cofactor()) sym = power_label(TrigBase::Cos, 1, f) + (latex ? "" : "*");
        if (e > 0) {
            if (latex) {
                sym += power_label(p.base(), e, f);  // \sin^{3}(t)
            } else {
                sym += power_label(p.base(), 1, f);  // sin(t)^3
                if (e > 1) sym += "^" + std::to_string(e);
            }
        } else if (!sym.empty() && !latex) {
            sym.pop_back();  // bare cos(t)* with nothing after it
        }
        terms.push_back({c, sym});
    }
    return join_terms(terms, latex);
}

std::string trig_polynomial_csv(const TrigPolynomial& p) {
    std::ostringstream out;
    out << "term,index,value\n";
    out << "constant,0," << rational_to_string(p.constant_term()) << "\n";
    for (const auto& [n, c] : p.cos_terms()) out << "cos," << n << "," << rational_to_string(c) << "\n";
    for (const auto& [n, c] : p.sin_terms()) out << "sin," << n << "," << rational_to_string(c) << "\n";
    return out.str();
}

std::string power_expansion_csv(const PowerExpansion& p) {
    std::ostringstream out;
    out << "base,cos_cofactor,exponent,coefficient\n";
    for (const auto& [e, c] : p.coeffs())
        out << base_name(p.base()) << "," << (p.cos_cofactor() ? 1 : 0) << "," << e << ","
            << rational_to_string(c) << "\n";
    return out.str();
}

std::string real_trig_series_csv(const RealTrigSeries& s) {
    std::ostringstream out;
    out << "term,index,value\n";
    out << "constant,0," << format_double(s.constant) << "\n";
    for (long n = 1; n <= s.harmonics(); ++n)
        out << "cos," << n << "," << format_double(s.cos_terms[static_cast<size_t>(n - 1)]) << "\n";
    for (long n = 1; n <= static_cast<long>(s.sin_terms.size()); ++n)
        out << "sin," << n << "," << format_double(s.sin_terms[static_cast<size_t>(n - 1)]) << "\n";
    out << "tail_bound,0," << format_double(s.tail_bound) << "\n";
    return out.str();
}

std::string verification_report_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "term,index,value\n";
    out << "max_abs_error,0," << format_double(r.max_abs_error) << "\n";
    out << "errors_constant,0," << format_double(r.errors_constant) << "\n";
    for (size_t i = 0; i < r.errors_cos.size(); ++i)
        out << "errors_cos," << i + 1 << "," << format_double(r.errors_cos[i]) << "\n";
    for (size_t i = 0; i < r.errors_sin.size(); ++i)
        out << "errors_sin," << i + 1 << "," << format_double(r.errors_sin[i]) << "\n";
    out << "samples_used,0," << r.samples_used << "\n";
    out << "harmonics_checked,0," << r.harmonics_checked << "\n";
    return out.str();
}

}  // namespace trigfour
