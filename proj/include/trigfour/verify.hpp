#pragma once

#include <trigfour/reciprocal.hpp>
#include <trigfour/trigpoly.hpp>

#include <functional>

namespace trigfour {

/// Per-coefficient absolute errors between an exact expansion and a
/// numerically extracted one. max_abs_error is the maximum over the constant
/// and every listed harmonic.
struct VerificationReport {
    double max_abs_error = 0.0;
    double errors_constant = 0.0;
    std::vector<double> errors_cos;
    std::vector<double> errors_sin;
    long samples_used = 0;
    long harmonics_checked = 0;

    bool passes(double tol) const { return max_abs_error <= tol; }
};

/// Fourier analysis of a 2pi-periodic f by the trapezoidal rule on M uniform
/// nodes t_m = 2 pi m / M:
///   a_n = (2/M) sum_m f(t_m) cos(n t_m),   b_n likewise with sin.
/// Exact for trigonometric polynomials below the aliasing limit, spectrally
/// accurate for analytic f. Requires M >= 2N+1; the constant slot holds a0/2.
/// Summation order is fixed (ascending node index), so results are
/// deterministic. Throws on a non-finite sample.
RealTrigSeries numeric_fourier(const std::function<double(double)>& f, long N, long M);

/// Coefficient-wise comparison over harmonics 1..N plus the constant.
/// samples_used is carried into the report (0 when unknown). Throws if either
/// side does not cover harmonics 1..N.
VerificationReport compare(const RealTrigSeries& exact, const RealTrigSeries& numeric,
                           long N, long samples_used = 0);

/// Same, with the exact side given as an exact trigonometric polynomial
/// (coefficients converted to double). The polynomial must not extend past
/// harmonic N.
VerificationReport compare(const TrigPolynomial& exact, const RealTrigSeries& numeric,
                           long N, long samples_used = 0);

}  // namespace trigfour
