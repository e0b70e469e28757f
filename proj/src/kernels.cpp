#include <trigfour/kernels.hpp>

#include <cassert>

namespace trigfour {
namespace {

// Term-level binomial: vanishing lower index short-circuits before the upper
// index is looked at, so summands like C(-1,-1) drop out instead of tripping
// the negative-upper-index guard.
Integer binom(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// b * 2^e with e possibly negative; negative shifts must divide exactly.
Integer shift2(Integer b, long e) {
    if (e >= 0) return b << e;
    assert(mpz_divisible_2exp_p(b.get_mpz_t(), static_cast<mp_bitcnt_t>(-e)));
    Integer r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

void require_nonneg(long v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + " must be >= 0");
}

void require_positive(long v, const char* what) {
    if (v <= 0) throw std::domain_error(std::string(what) + " must be >= 1");
}

}  // namespace

Integer binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0");
    return binom(n, k);
}

Integer pow2(long e) {
    if (e < 0) throw std::domain_error("pow2: negative exponent");
    return Integer(1) << e;
}

Integer kernel_alpha(long n, long s) {
    require_positive(n, "kernel_alpha: n");
    require_nonneg(s, "kernel_alpha: s");
    if (s > n / 2) return 0;
    return shift2(binom(n - s, s) + binom(n - s - 1, s - 1), n - 2 * s - 1);
}

Integer kernel_alpha_prime(long n, long s) {
    require_positive(n, "kernel_alpha_prime: n");
    require_nonneg(s, "kernel_alpha_prime: s");
    if (s > (n + 1) / 2) return 0;
    if (n == 1 && s == 1) return 1;  // base value; see header
    Integer b = binom(n + 1 - s, s) + 2 * binom(n - s, s - 1) +
                binom(n - s - 1, s - 2);
    return shift2(std::move(b), n - 2 * s - 1);
}

Integer kernel_alpha_dprime(long n, long s) {
    require_positive(n, "kernel_alpha_dprime: n");
    require_nonneg(s, "kernel_alpha_dprime: s");
    if (s > (n - 1) / 2) return 0;
    return shift2(binom(n - s - 1, s), n - 2 * s - 1);
}

Integer kernel_bruteforce(KernelKind kind, long n, long s) {
    require_nonneg(n, "kernel_bruteforce: n");
    require_nonneg(s, "kernel_bruteforce: s");
    // Column index 2j+offset; every summand with j > n has a vanishing first
    // factor, so the sum over j in [0, n] is the whole series.
    long offset = 0;
    switch (kind) {
        case KernelKind::Alpha: offset = 0; break;
        case KernelKind::AlphaPrime: offset = -1; break;
        case KernelKind::AlphaDoublePrime: offset = 1; break;
    }
    Integer total = 0;
    for (long j = s; j <= n; ++j) {  // C(j,s) = 0 below j = s
        long col = 2 * j + offset;
        if (col > n) break;
        if (col < 0) continue;
        total += binom(n, col) * binom(j, s);
    }
    return total;
}

Integer lemma2_sum(long k, long s, SumMode mode) {
    if (s < 0 || s > k) throw std::domain_error("lemma2_sum: need 0 <= s <= k");
    if (s == 0) return 0;  // empty sum; closed form has C(k-1,-1) = 0
    if (mode == SumMode::ClosedForm) return pow2(2 * s - 1) * binom(k + s - 1, 2 * s - 1);
    Integer total = 0;
    for (long j = 1; j <= s; ++j) total += binom(2 * k, 2 * j - 1) * binom(k - j, s - j);
    return total;
}

Integer cooc_sum(long ell, long t) {
    require_nonneg(ell, "cooc_sum: ell");
    require_nonneg(t, "cooc_sum: t");
    Integer total = 0;
    for (long s = 0; s <= t; ++s) {
        Integer w = binom(2 * ell + s, s) + binom(2 * ell + s - 1, s - 1);
        Integer term = w * binom(2 * t + 2 * ell, t - s);
        if (s % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Integer cheie_sum(long n, long ell, SumMode mode) {
    require_nonneg(n, "cheie_sum: n");
    require_nonneg(ell, "cheie_sum: ell");
    if (mode == SumMode::ClosedForm) return binom(n + 2 * ell, ell);
    Integer total = 0;
    for (long k = 0; k <= ell; ++k) {
        Integer w;
        if (n == 0 && k == 0)
            w = 1;  // C(-1,0) - C(-1,-1) under the paper's convention
        else
            w = binom(n + 2 * k - 1, k) - binom(n + 2 * k - 1, k - 1);
        total += w * binom(2 * (ell - k), ell - k);
    }
    return total;
}

}  // namespace trigfour
