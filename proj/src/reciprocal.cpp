#include <trigfour/reciprocal.hpp>

#include <cmath>
#include <stdexcept>

namespace trigfour {

ReciprocalParams::ReciprocalParams(double a) : a_(a) {
    if (!std::isfinite(a) || std::fabs(a) <= 1.0 + 1e-9)
        throw std::domain_error("ReciprocalParams: need |a| > 1");
    const double inv_a2 = 1.0 / (a * a);
    s_ = std::sqrt(1.0 - inv_a2);
    // 1 - s_val as a^-2 / (1 + s_val): no cancellation for large |a|.
    ratio_ = a * (inv_a2 / (1.0 + s_));
}

double recip_cos_coeff(const ReciprocalParams& p, long n) {
    if (n < 0) throw std::domain_error("recip_cos_coeff: n must be >= 0");
    // (2/(a s)) ratio^n rather than 2 a^(n-1) (1-s)^n / s: the factors of the
    // naive product overflow/underflow separately for large |a| and n.
    return 2.0 / (p.a() * p.s_val()) * std::pow(p.ratio(), static_cast<double>(n));
}

double recip_tail_bound(const ReciprocalParams& p, long N) {
    if (N < 0) throw std::domain_error("recip_tail_bound: N must be >= 0");
    return std::fabs(recip_cos_coeff(p, N + 1)) / (1.0 - std::fabs(p.ratio()));
}

RealTrigSeries recip_cos_series(const ReciprocalParams& p, long N) {
    if (N < 0) throw std::domain_error("recip_cos_series: N must be >= 0");
    RealTrigSeries s;
    s.constant = 0.5 * recip_cos_coeff(p, 0);
    s.cos_terms.resize(static_cast<size_t>(N), 0.0);
    s.sin_terms.resize(static_cast<size_t>(N), 0.0);
    for (long n = 1; n <= N; ++n) s.cos_terms[static_cast<size_t>(n - 1)] = recip_cos_coeff(p, n);
    s.tail_bound = recip_tail_bound(p, N);
    return s;
}

RealTrigSeries recip_sin_series(const ReciprocalParams& p, long N) {
    if (N < 0) throw std::domain_error("recip_sin_series: N must be >= 0");
    RealTrigSeries s;
    s.constant = 0.5 * recip_cos_coeff(p, 0);
    s.cos_terms.resize(static_cast<size_t>(N), 0.0);
    s.sin_terms.resize(static_cast<size_t>(N), 0.0);
    for (long n = 1; n <= N; ++n) {
        const long k = n / 2;
        double c = recip_cos_coeff(p, n);
        if (k % 2 != 0) c = -c;  // (-1)^k for both the 2k and 2k+1 families
        if (n % 2 == 0)
            s.cos_terms[static_cast<size_t>(n - 1)] = c;
        else
            s.sin_terms[static_cast<size_t>(n - 1)] = c;
    }
    s.tail_bound = recip_tail_bound(p, N);
    return s;
}

double recip_partial_sum_oracle(const ReciprocalParams& p, long n, long K) {
    if (n < 0 || K < 0) throw std::domain_error("recip_partial_sum_oracle: need n, K >= 0");
    const double inv_2a_sq = 1.0 / (4.0 * p.a() * p.a());  // (2a)^-2
    // term_k = (2a)^(-n-2k) C(n+2k,k), advanced multiplicatively:
    //   term_{k+1}/term_k = (m+1)(m+2) / ((k+1)(m+1-k)) * (2a)^-2,  m = n+2k.
    double term = std::pow(2.0 * p.a(), static_cast<double>(-n));
    double sum = term;
    for (long k = 0; k < K; ++k) {
        const double m = static_cast<double>(n + 2 * k);
        term *= (m + 1.0) * (m + 2.0) /
                ((static_cast<double>(k) + 1.0) * (m + 1.0 - static_cast<double>(k)));
        term *= inv_2a_sq;
        sum += term;
    }
    return 2.0 / p.a() * sum;
}

}  // namespace trigfour
