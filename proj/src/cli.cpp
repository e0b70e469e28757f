#include <trigfour/cli.hpp>

#include <trigfour/expansions.hpp>
#include <trigfour/json_io.hpp>
#include <trigfour/kernels.hpp>
#include <trigfour/reciprocal.hpp>
#include <trigfour/render.hpp>
#include <trigfour/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>

namespace trigfour {
namespace {

using nlohmann::json;

struct CommonOpts {
    std::string format = "text";
};

void emit_integer_result(std::ostream& out, OutputFormat f, const std::string& text_lhs,
                         const std::string& latex_lhs, const json& meta, const Integer& value) {
    switch (f) {
        case OutputFormat::Text: out << text_lhs << " = " << value.get_str() << "\n"; break;
        case OutputFormat::Latex: out << latex_lhs << " = " << value.get_str() << "\n"; break;
        case OutputFormat::Json: {
            json j = meta;
            j["value"] = value.get_str();
            out << j.dump() << "\n";
            break;
        }
        case OutputFormat::Csv: {
            std::string header, row;
            for (const auto& [k, v] : meta.items()) {
                header += k + ",";
                row += (v.is_string() ? v.get<std::string>() : v.dump()) + ",";
            }
            out << header << "value\n" << row << value.get_str() << "\n";
            break;
        }
    }
}

int run_kernel(std::ostream& out, OutputFormat f, const std::string& kind, long n, long s,
               bool brute) {
    KernelKind kk;
    std::string sym;
    if (kind == "alpha") {
        kk = KernelKind::Alpha;
        sym = "\\alpha";
    } else if (kind == "alpha-prime") {
        kk = KernelKind::AlphaPrime;
        sym = "\\alpha'";
    } else if (kind == "alpha-dprime") {
        kk = KernelKind::AlphaDoublePrime;
        sym = "\\alpha''";
    } else {
        throw CLI::ValidationError("--kind", "expected alpha, alpha-prime or alpha-dprime");
    }
    Integer v;
    if (brute) {
        v = kernel_bruteforce(kk, n, s);
    } else if (kk == KernelKind::Alpha) {
        v = kernel_alpha(n, s);
    } else if (kk == KernelKind::AlphaPrime) {
        v = kernel_alpha_prime(n, s);
    } else {
        v = kernel_alpha_dprime(n, s);
    }
    const std::string args = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
    emit_integer_result(out, f, kind + args, sym + "_{" + std::to_string(n) + "," + std::to_string(s) + "}",
                        json{{"op", "kernel"}, {"kind", kind}, {"n", n}, {"s", s}, {"brute", brute}}, v);
    return 0;
}

int run_lemma(std::ostream& out, OutputFormat f, const std::string& id, long k, long s, long n,
              long ell, long t, bool brute) {
    const SumMode mode = brute ? SumMode::BruteForce : SumMode::ClosedForm;
    Integer v;
    std::string lhs;
    json meta{{"op", "lemma"}, {"id", id}, {"brute", brute}};
    if (id == "2") {
        v = lemma2_sum(k, s, mode);
        lhs = "lemma2(" + std::to_string(k) + "," + std::to_string(s) + ")";
        meta["k"] = k;
        meta["s"] = s;
    } else if (id == "cooc") {
        v = cooc_sum(ell, t);
        lhs = "cooc(" + std::to_string(ell) + "," + std::to_string(t) + ")";
        meta["ell"] = ell;
        meta["t"] = t;
    } else if (id == "cheie") {
        v = cheie_sum(n, ell, mode);
        lhs = "cheie(" + std::to_string(n) + "," + std::to_string(ell) + ")";
        meta["n"] = n;
        meta["ell"] = ell;
    } else {
        throw CLI::ValidationError("--id", "expected 2, cooc or cheie");
    }
    emit_integer_result(out, f, lhs, lhs, meta, v);
    return 0;
}

TrigBase parse_base(const std::string& b) {
    if (b == "cos") return TrigBase::Cos;
    if (b == "sin") return TrigBase::Sin;
    throw CLI::ValidationError("--base", "expected cos or sin");
}

int run_multiple_angle(std::ostream& out, OutputFormat f, const std::string& base, long n) {
    const TrigBase tb = parse_base(base);
    const PowerExpansion p =
        tb == TrigBase::Cos ? cos_multiple_angle(n) : sin_multiple_angle(n);
    switch (f) {
        case OutputFormat::Json: {
            json j = power_expansion_to_json(p);
            j["n"] = n;
            out << j.dump() << "\n";
            break;
        }
        case OutputFormat::Csv: out << power_expansion_csv(p); break;
        default:
            out << harmonic_label(tb, n, f) << " = " << render_power_expansion(p, f) << "\n";
    }
    return 0;
}

int run_power_fourier(std::ostream& out, OutputFormat f, const std::string& base, long n) {
    const TrigBase tb = parse_base(base);
    const TrigPolynomial p = tb == TrigBase::Cos ? cos_power_fourier(n) : sin_power_fourier(n);
    switch (f) {
        case OutputFormat::Json: {
            json j = trig_polynomial_to_json(p);
            j["n"] = n;
            out << j.dump() << "\n";
            break;
        }
        case OutputFormat::Csv: out << trig_polynomial_csv(p); break;
        default:
            out << power_label(tb, n, f) << " = " << render_trig_polynomial(p, f) << "\n";
    }
    return 0;
}

int run_reciprocal(std::ostream& out, OutputFormat f, const std::string& target, double a,
                   long terms, bool show_tail) {
    const TrigBase tb = parse_base(target);
    const ReciprocalParams params(a);
    const RealTrigSeries s =
        tb == TrigBase::Cos ? recip_cos_series(params, terms) : recip_sin_series(params, terms);
    switch (f) {
        case OutputFormat::Json: out << reciprocal_series_to_json(params, terms, s).dump() << "\n"; break;
        case OutputFormat::Csv: out << real_trig_series_csv(s); break;
        case OutputFormat::Latex: {
            out << "\\frac{1}{" << format_double(a) << " - \\" << (tb == TrigBase::Cos ? "cos" : "sin")
                << "(t)} = " << format_double(s.constant);
            for (long n = 1; n <= terms; ++n) {
                const double c = s.cos_terms[static_cast<size_t>(n - 1)];
                const double b = s.sin_terms[static_cast<size_t>(n - 1)];
                if (c != 0.0)
                    out << (c < 0 ? " - " : " + ") << format_double(std::fabs(c))
                        << harmonic_label(TrigBase::Cos, n, f);
                if (b != 0.0)
                    out << (b < 0 ? " - " : " + ") << format_double(std::fabs(b))
                        << harmonic_label(TrigBase::Sin, n, f);
            }
            out << " + \\cdots\n";
            break;
        }
        case OutputFormat::Text: {
            out << "f(t) = 1/(" << format_double(a) << " - " << (tb == TrigBase::Cos ? "cos" : "sin")
                << "(t)), harmonics 1.." << terms << "\n";
            out << "constant " << format_double(s.constant) << "\n";
            for (long n = 1; n <= terms; ++n) {
                const double c = s.cos_terms[static_cast<size_t>(n - 1)];
                const double b = s.sin_terms[static_cast<size_t>(n - 1)];
                if (c != 0.0 || tb == TrigBase::Cos) out << "cos " << n << " " << format_double(c) << "\n";
                if (b != 0.0) out << "sin " << n << " " << format_double(b) << "\n";
            }
            if (show_tail) out << "tail_bound " << format_double(s.tail_bound) << "\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify suites: library-scale spot checks with the exit-code contract.
// The heavyweight parameter sweeps live in the acceptance test suite.

struct SuiteCheck {
    std::string name;
    bool passed = false;
    double max_abs_error = 0.0;  // 0 for exact checks
    json report;                 // optional VerificationReport payload
};

void check_exact(std::vector<SuiteCheck>& cs, const std::string& name, bool ok) {
    cs.push_back({name, ok, 0.0, {}});
}

void check_tol(std::vector<SuiteCheck>& cs, const std::string& name, double err, double tol,
               json report = {}) {
    cs.push_back({name, err <= tol, err, std::move(report)});
}

void suite_kernels(std::vector<SuiteCheck>& cs) {
    bool ok = true;
    for (long n = 1; n <= 100 && ok; ++n)
        for (long s = 0; s <= n && ok; ++s)
            ok = kernel_alpha(n, s) == kernel_bruteforce(KernelKind::Alpha, n, s) &&
                 kernel_alpha_prime(n, s) == kernel_bruteforce(KernelKind::AlphaPrime, n, s) &&
                 kernel_alpha_dprime(n, s) == kernel_bruteforce(KernelKind::AlphaDoublePrime, n, s);
    check_exact(cs, "kernel closed forms == defining sums (n <= 100)", ok);

    ok = true;
    for (long k = 0; k <= 60 && ok; ++k)
        for (long s = 0; s <= k && ok; ++s)
            ok = lemma2_sum(k, s, SumMode::BruteForce) == lemma2_sum(k, s, SumMode::ClosedForm);
    check_exact(cs, "lemma2 sum == closed form (k <= 60)", ok);

    ok = true;
    for (long ell = 0; ell <= 40 && ok; ++ell)
        for (long t = 1; t <= 40 && ok; ++t) ok = cooc_sum(ell, t) == 0;
    check_exact(cs, "cooc alternating sum vanishes (ell, t <= 40)", ok);

    ok = true;
    for (long n = 0; n <= 40 && ok; ++n)
        for (long ell = 0; ell <= 40 && ok; ++ell)
            ok = cheie_sum(n, ell, SumMode::BruteForce) == cheie_sum(n, ell, SumMode::ClosedForm);
    check_exact(cs, "cheie convolution == C(n+2l,l) (n, l <= 40)", ok);
}

void suite_expansions(std::vector<SuiteCheck>& cs, double tol) {
    bool ok = true;
    for (long n = 1; n <= 64 && ok; ++n) ok = cos_multiple_angle(n) == chebyshev_oracle(n);
    check_exact(cs, "cos multiple-angle == Chebyshev recurrence (n <= 64)", ok);

    ok = true;
    for (long n = 0; n <= 32 && ok; ++n)
        ok = cos_power_fourier(n) == power_product_oracle(TrigBase::Cos, n) &&
             sin_power_fourier(n) == power_product_oracle(TrigBase::Sin, n);
    check_exact(cs, "power-reduction formulas == product oracle (n <= 32)", ok);

    double worst = 0.0;
    for (long n = 1; n <= 16; ++n) {
        for (long i = 0; i < 256; ++i) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / 256.0;
            worst = std::max(worst, std::fabs(pe_eval(cos_multiple_angle(n), t) -
                                              std::cos(static_cast<double>(n) * t)));
            worst = std::max(worst, std::fabs(pe_eval(sin_multiple_angle(n), t) -
                                              std::sin(static_cast<double>(n) * t)));
            worst = std::max(worst, std::fabs(tp_eval(cos_power_fourier(n), t) -
                                              std::pow(std::cos(t), static_cast<double>(n))));
            worst = std::max(worst, std::fabs(tp_eval(sin_power_fourier(n), t) -
                                              std::pow(std::sin(t), static_cast<double>(n))));
        }
    }
    check_tol(cs, "pointwise agreement of all expansions (n <= 16)", worst, std::min(tol, 1e-12));
}

void suite_reciprocal(std::vector<SuiteCheck>& cs, double tol, long samples) {
    const long N = 25;
    for (double a : {1.5, -1.5, 2.0, -2.0, std::sqrt(3.0), 10.0}) {
        const ReciprocalParams p(a);
        const RealTrigSeries exact = recip_cos_series(p, N);
        const RealTrigSeries numeric = numeric_fourier(
            [a](double t) { return 1.0 / (a - std::cos(t)); }, N, samples);
        const VerificationReport r = compare(exact, numeric, N, samples);
        check_tol(cs, "1/(a - cos t) closed form vs quadrature, a = " + format_double(a),
                  r.max_abs_error, tol, verification_report_to_json(r));
    }
    for (double a : {2.0, std::sqrt(3.0)}) {
        const ReciprocalParams p(a);
        const RealTrigSeries exact = recip_sin_series(p, N);
        const RealTrigSeries numeric = numeric_fourier(
            [a](double t) { return 1.0 / (a - std::sin(t)); }, N, samples);
        const VerificationReport r = compare(exact, numeric, N, samples);
        check_tol(cs, "1/(a - sin t) closed form vs quadrature, a = " + format_double(a),
                  r.max_abs_error, tol, verification_report_to_json(r));
    }

    double worst_rel = 0.0;
    for (double a : {1.5, -1.5, 2.0, -2.0, std::sqrt(3.0), 10.0}) {
        const ReciprocalParams p(a);
        const double a0 = recip_cos_coeff(p, 0);
        for (long n = 1; n <= 50; ++n) {
            const double an = recip_cos_coeff(p, n);
            const double res = (recip_cos_coeff(p, n - 1) - a * an) * a0 - 2.0 * an;
            worst_rel = std::max(worst_rel, std::fabs(res) / std::fabs(an));
        }
    }
    check_tol(cs, "coefficient recurrence (a_{n-1} - a a_n) a_0 = 2 a_n", worst_rel, 1e-12);

    double worst = 0.0;
    for (double a : {1.1, 1.5, 2.0, 10.0}) {
        const ReciprocalParams p(a);
        for (long n = 0; n <= 25; ++n)
            worst = std::max(worst, std::fabs(recip_partial_sum_oracle(p, n, 200) -
                                              recip_cos_coeff(p, n)));
    }
    check_tol(cs, "binomial partial sums converge to closed form (K = 200)", worst, 1e-10);
}

int run_verify(std::ostream& out, OutputFormat f, const std::string& suite, double tol,
               long samples) {
    std::vector<SuiteCheck> checks;
    const bool all = suite == "all";
    if (suite == "kernels" || all) suite_kernels(checks);
    if (suite == "expansions" || all) suite_expansions(checks, tol);
    if (suite == "reciprocal" || all) suite_reciprocal(checks, tol, samples);
    if (checks.empty())
        throw CLI::ValidationError("--suite", "expected kernels, expansions, reciprocal or all");

    const bool passed = std::all_of(checks.begin(), checks.end(),
                                    [](const SuiteCheck& c) { return c.passed; });
    if (f == OutputFormat::Json) {
        json jchecks = json::array();
        for (const SuiteCheck& c : checks) {
            json jc{{"name", c.name}, {"passed", c.passed}, {"max_abs_error", c.max_abs_error}};
            if (!c.report.is_null()) jc["report"] = c.report;
            jchecks.push_back(std::move(jc));
        }
        out << json{{"suite", suite}, {"tol", tol}, {"samples", samples}, {"checks", jchecks},
                    {"passed", passed}}
                   .dump()
            << "\n";
    } else {
        for (const SuiteCheck& c : checks)
            out << (c.passed ? "ok   " : "FAIL ") << c.name
                << (c.max_abs_error > 0 ? "  (max_abs_error " + format_double(c.max_abs_error) + ")"
                                        : "")
                << "\n";
        out << (passed ? "PASSED" : "FAILED") << " " << checks.size() << " checks, suite "
            << suite << "\n";
    }
    return passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multiple-angle, power-reduction and reciprocal Fourier expansions"};
    app.name("trigfour");
    app.require_subcommand(1);

    CommonOpts common;

    // kernel
    auto* kernel = app.add_subcommand("kernel", "Combinatorial kernel values");
    std::string kind = "alpha";
    long kn = 1, ks = 0;
    bool kbrute = false;
    kernel->add_option("--kind", kind, "alpha | alpha-prime | alpha-dprime")->required();
    kernel->add_option("--n", kn)->required();
    kernel->add_option("--s", ks)->required();
    kernel->add_flag("--brute", kbrute, "evaluate the defining sum instead of the closed form");

    // lemma
    auto* lemma = app.add_subcommand("lemma", "Companion summation identities");
    std::string lid;
    long lk = 0, ls = 0, ln = 0, lell = 0, lt = 0;
    bool lbrute = false;
    lemma->add_option("--id", lid, "2 | cooc | cheie")->required();
    lemma->add_option("--k", lk);
    lemma->add_option("--s", ls);
    lemma->add_option("--n", ln);
    lemma->add_option("--ell", lell);
    lemma->add_option("--t", lt);
    lemma->add_flag("--brute", lbrute);

    // multiple-angle
    auto* mangle = app.add_subcommand("multiple-angle", "cos(nt)/sin(nt) as power expansions");
    std::string mbase;
    long mn = 1;
    mangle->add_option("--base", mbase, "cos | sin")->required();
    mangle->add_option("--n", mn)->required();

    // power-fourier
    auto* pfour = app.add_subcommand("power-fourier", "cos^n/sin^n as Fourier polynomials");
    std::string pbase;
    long pn = 0;
    pfour->add_option("--base", pbase, "cos | sin")->required();
    pfour->add_option("--n", pn)->required();

    // reciprocal
    auto* recip = app.add_subcommand("reciprocal", "Fourier series of 1/(a - cos t), 1/(a - sin t)");
    std::string rtarget;
    double ra = 2.0;
    long rterms = 10;
    bool rtail = false;
    recip->add_option("--target", rtarget, "cos | sin")->required();
    recip->add_option("--a", ra, "parameter with |a| > 1")->required();
    recip->add_option("--terms", rterms, "number of harmonics")->required();
    recip->add_flag("--tail-bound", rtail, "also print the truncation tail bound");

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check generators against oracles");
    std::string vsuite = "all";
    double vtol = 1e-9;
    long vsamples = 4096;
    verify->add_option("--suite", vsuite, "kernels | expansions | reciprocal | all");
    verify->add_option("--tol", vtol, "comparison tolerance (default 1e-9)");
    verify->add_option("--samples", vsamples, "quadrature nodes (default 4096)");

    for (auto* sc : {kernel, lemma, mangle, pfour, recip, verify})
        sc->add_option("--format", common.format, "text | json | latex | csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const OutputFormat f = parse_format(common.format);
        if (kernel->parsed()) return run_kernel(out, f, kind, kn, ks, kbrute);
        if (lemma->parsed()) return run_lemma(out, f, lid, lk, ls, ln, lell, lt, lbrute);
        if (mangle->parsed()) return run_multiple_angle(out, f, mbase, mn);
        if (pfour->parsed()) return run_power_fourier(out, f, pbase, pn);
        if (recip->parsed()) return run_reciprocal(out, f, rtarget, ra, rterms, rtail);
        if (verify->parsed()) return run_verify(out, f, vsuite, vtol, vsamples);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace trigfour
