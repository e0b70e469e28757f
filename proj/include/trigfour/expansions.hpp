#pragma once

#include <trigfour/trigpoly.hpp>

namespace trigfour {

/// n split as 2k (even) or 2k+1 (odd).
struct Parity {
    bool odd = false;
    long k = 0;

    static Parity decompose(long n);
    long compose() const { return 2 * k + (odd ? 1 : 0); }
    bool operator==(const Parity&) const = default;
};

/// cos(nt) as a polynomial in cos(t): the coefficient of cos^(n-2s) is
/// (-1)^s alpha(n,s). All coefficients are integers.
PowerExpansion cos_multiple_angle(long n);

/// sin(nt) as a polynomial in sin(t). Odd n = 2k+1 gives odd powers
/// 2k+1-2s with coefficients (-4)^(k-s) (C(2k+1-s,s) + C(2k-s,s-1));
/// even n = 2k gives cos(t) times odd powers 2s-1 with coefficients
/// (-1)^(s-1) 2^(2s-1) C(k+s-1,2s-1).
PowerExpansion sin_multiple_angle(long n);

/// Degree-n Chebyshev polynomial of the first kind via T0 = 1, T1 = x,
/// T_{n+1} = 2x T_n - T_{n-1}. Independent oracle for cos_multiple_angle.
PowerExpansion chebyshev_oracle(long n);

/// Fourier form of cos^n(t):
///   cos^(2k)   = 2^(1-2k) sum_{j<k} C(2k,j) cos((2k-2j)t) + 2^(-2k) C(2k,k)
///   cos^(2k+1) = 2^(-2k)  sum_{j<=k} C(2k+1,j) cos((2k+1-2j)t).
TrigPolynomial cos_power_fourier(long n);

/// Fourier form of sin^n(t); same harmonics with (-1)^(k-j) signs, cosines
/// for even n and sines for odd n.
TrigPolynomial sin_power_fourier(long n);

/// base(t)^n by repeated product-to-sum multiplication. Independent oracle
/// for the power-reduction formulas.
TrigPolynomial power_product_oracle(TrigBase base, long n);

}  // namespace trigfour
