#include <trigfour/expansions.hpp>

#include <trigfour/kernels.hpp>

#include <utility>
#include <vector>

namespace trigfour {

Parity Parity::decompose(long n) {
    if (n < 0) throw std::domain_error("Parity: n must be >= 0");
    return {n % 2 == 1, n / 2};
}

PowerExpansion cos_multiple_angle(long n) {
    if (n <= 0) throw std::domain_error("cos_multiple_angle: n must be >= 1");
    PowerExpansion p(TrigBase::Cos, false);
    for (long s = 0; s <= n / 2; ++s) {
        Integer a = kernel_alpha(n, s);
        if (s % 2 != 0) a = -a;
        p.add_term(n - 2 * s, Rational(a));
    }
    return p;
}

PowerExpansion sin_multiple_angle(long n) {
    if (n <= 0) throw std::domain_error("sin_multiple_angle: n must be >= 1");
    const auto [odd, k] = Parity::decompose(n);
    if (odd) {
        PowerExpansion p(TrigBase::Sin, false);
        for (long s = 0; s <= k; ++s) {
            // (-4)^(k-s) (C(2k+1-s,s) + C(2k-s,s-1))
            Integer c = binomial(2 * k + 1 - s, s);
            if (s >= 1) c += binomial(2 * k - s, s - 1);
            c <<= 2 * (k - s);
            if ((k - s) % 2 != 0) c = -c;
            p.add_term(2 * k + 1 - 2 * s, Rational(c));
        }
        return p;
    }
    PowerExpansion p(TrigBase::Sin, true);
    for (long s = 1; s <= k; ++s) {
        Integer c = pow2(2 * s - 1) * binomial(k + s - 1, 2 * s - 1);
        if (s % 2 == 0) c = -c;
        p.add_term(2 * s - 1, Rational(c));
    }
    return p;
}

PowerExpansion chebyshev_oracle(long n) {
    if (n < 0) throw std::domain_error("chebyshev_oracle: n must be >= 0");
    // Dense integer recurrence; packed into a PowerExpansion at the end.
    std::vector<Integer> prev{1};      // T0
    std::vector<Integer> cur{0, 1};    // T1
    if (n == 0) cur = std::move(prev);
    for (long m = 2; m <= n; ++m) {
        std::vector<Integer> next(static_cast<size_t>(m) + 1, Integer(0));
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    PowerExpansion p(TrigBase::Cos, false);
    for (size_t e = 0; e < cur.size(); ++e)
        if (cur[e] != 0) p.add_term(static_cast<long>(e), Rational(cur[e]));
    return p;
}

TrigPolynomial cos_power_fourier(long n) {
    if (n < 0) throw std::domain_error("cos_power_fourier: n must be >= 0");
    const auto [odd, k] = Parity::decompose(n);
    TrigPolynomial p;
    if (!odd) {
        for (long j = 0; j < k; ++j)
            p.add_cos(2 * k - 2 * j, pow2_rational(1 - 2 * k) * Rational(binomial(2 * k, j)));
        p.add_constant(pow2_rational(-2 * k) * Rational(binomial(2 * k, k)));
    } else {
        for (long j = 0; j <= k; ++j)
            p.add_cos(2 * k + 1 - 2 * j, pow2_rational(-2 * k) * Rational(binomial(2 * k + 1, j)));
    }
    return p;
}

TrigPolynomial sin_power_fourier(long n) {
    if (n < 0) throw std::domain_error("sin_power_fourier: n must be >= 0");
    const auto [odd, k] = Parity::decompose(n);
    TrigPolynomial p;
    if (!odd) {
        for (long j = 0; j < k; ++j) {
            Rational c = pow2_rational(1 - 2 * k) * Rational(binomial(2 * k, j));
            p.add_cos(2 * k - 2 * j, (k - j) % 2 == 0 ? c : -c);
        }
        p.add_constant(pow2_rational(-2 * k) * Rational(binomial(2 * k, k)));
    } else {
        for (long j = 0; j <= k; ++j) {
            Rational c = pow2_rational(-2 * k) * Rational(binomial(2 * k + 1, j));
            p.add_sin(2 * k + 1 - 2 * j, (k - j) % 2 == 0 ? c : -c);
        }
    }
    return p;
}

TrigPolynomial power_product_oracle(TrigBase base, long n) {
    if (n < 0) throw std::domain_error("power_product_oracle: n must be >= 0");
    TrigPolynomial factor = base == TrigBase::Cos ? TrigPolynomial::cosine(1, Rational(1))
                                                  : TrigPolynomial::sine(1, Rational(1));
    TrigPolynomial acc = TrigPolynomial::constant(Rational(1));
    for (long i = 0; i < n; ++i) acc = tp_mul(acc, factor);
    return acc;
}

}  // namespace trigfour
