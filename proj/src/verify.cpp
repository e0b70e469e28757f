#include <trigfour/verify.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trigfour {

RealTrigSeries numeric_fourier(const std::function<double(double)>& f, long N, long M) {
    if (N < 0) throw std::domain_error("numeric_fourier: N must be >= 0");
    if (M < 2 * N + 1)
        throw std::domain_error("numeric_fourier: M < 2N+1 aliases harmonic N");

    std::vector<double> samples(static_cast<size_t>(M));
    for (long m = 0; m < M; ++m) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
        const double v = f(t);
        if (!std::isfinite(v)) throw std::runtime_error("numeric_fourier: non-finite sample");
        samples[static_cast<size_t>(m)] = v;
    }

    RealTrigSeries s;
    s.cos_terms.resize(static_cast<size_t>(N), 0.0);
    s.sin_terms.resize(static_cast<size_t>(N), 0.0);

    double mean = 0.0;
    for (long m = 0; m < M; ++m) mean += samples[static_cast<size_t>(m)];
    s.constant = mean / static_cast<double>(M);

    for (long n = 1; n <= N; ++n) {
        double ca = 0.0, sa = 0.0;
        for (long m = 0; m < M; ++m) {
            const double t =
                2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
            ca += samples[static_cast<size_t>(m)] * std::cos(static_cast<double>(n) * t);
            sa += samples[static_cast<size_t>(m)] * std::sin(static_cast<double>(n) * t);
        }
        s.cos_terms[static_cast<size_t>(n - 1)] = 2.0 * ca / static_cast<double>(M);
        s.sin_terms[static_cast<size_t>(n - 1)] = 2.0 * sa / static_cast<double>(M);
    }
    s.tail_bound = 0.0;  // not applicable
    return s;
}

VerificationReport compare(const RealTrigSeries& exact, const RealTrigSeries& numeric,
                           long N, long samples_used) {
    if (N < 0) throw std::domain_error("compare: N must be >= 0");
    if (exact.harmonics() < N || numeric.harmonics() < N)
        throw std::domain_error("compare: series do not cover harmonics 1..N");

    VerificationReport r;
    r.harmonics_checked = N;
    r.samples_used = samples_used;
    r.errors_constant = std::fabs(exact.constant - numeric.constant);
    r.max_abs_error = r.errors_constant;
    r.errors_cos.resize(static_cast<size_t>(N), 0.0);
    r.errors_sin.resize(static_cast<size_t>(N), 0.0);
    for (long n = 1; n <= N; ++n) {
        const size_t i = static_cast<size_t>(n - 1);
        r.errors_cos[i] = std::fabs(exact.cos_terms[i] - numeric.cos_terms[i]);
        r.errors_sin[i] = std::fabs(exact.sin_terms[i] - numeric.sin_terms[i]);
        r.max_abs_error = std::max({r.max_abs_error, r.errors_cos[i], r.errors_sin[i]});
    }
    return r;
}

VerificationReport compare(const TrigPolynomial& exact, const RealTrigSeries& numeric,
                           long N, long samples_used) {
    if (exact.max_harmonic() > N)
        throw std::domain_error("compare: exact polynomial extends past harmonic N");
    RealTrigSeries e;
    e.constant = exact.constant_term().get_d();
    e.cos_terms.resize(static_cast<size_t>(N), 0.0);
    e.sin_terms.resize(static_cast<size_t>(N), 0.0);
    for (const auto& [n, c] : exact.cos_terms()) e.cos_terms[static_cast<size_t>(n - 1)] = c.get_d();
    for (const auto& [n, c] : exact.sin_terms()) e.sin_terms[static_cast<size_t>(n - 1)] = c.get_d();
    return compare(e, numeric, N, samples_used);
}

}  // namespace trigfour
