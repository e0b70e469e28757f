#pragma once

#include <vector>

namespace trigfour {

/// Validated parameter for f(t) = 1/(a - cos t) and g(t) = 1/(a - sin t),
/// together with the derived quantities every coefficient formula uses:
///   s_val = sqrt(1 - a^-2),   ratio = a (1 - s_val) = a - sign(a) sqrt(a^2-1).
/// The Fourier coefficients form the geometric family
///   a_n = (2 / (a s_val)) ratio^n,  |ratio| < 1.
class ReciprocalParams {
  public:
    /// Requires |a| > 1; values with |a| <= 1 + 1e-9 are rejected outright
    /// since every derived quantity is catastrophically cancelled there.
    explicit ReciprocalParams(double a);

    double a() const { return a_; }
    double s_val() const { return s_; }
    double ratio() const { return ratio_; }

  private:
    double a_;
    double s_;
    double ratio_;
};

/// Truncated real trigonometric series; cos_terms[i] / sin_terms[i] hold the
/// coefficient of harmonic i+1. tail_bound bounds the sup-norm of whatever
/// was discarded (0 where not applicable).
struct RealTrigSeries {
    double constant = 0.0;
    std::vector<double> cos_terms;
    std::vector<double> sin_terms;
    double tail_bound = 0.0;

    long harmonics() const { return static_cast<long>(cos_terms.size()); }
};

/// a_n of 1/(a - cos t), n >= 0. a_0 = 2/(a s_val); the series constant is
/// a_0/2.
double recip_cos_coeff(const ReciprocalParams& p, long n);

/// Harmonics 1..N of 1/(a - cos t) plus the geometric tail bound.
RealTrigSeries recip_cos_series(const ReciprocalParams& p, long N);

/// Harmonics 1..N of 1/(a - sin t): harmonic 2k carries cos coefficient
/// (-1)^k a_{2k}, harmonic 2k+1 carries sin coefficient (-1)^k a_{2k+1}.
RealTrigSeries recip_sin_series(const ReciprocalParams& p, long N);

/// Partial sum (2/a) sum_{k=0..K} (2a)^(-n-2k) C(n+2k,k) of the binomial
/// series for a_n; converges to recip_cos_coeff(p,n) as K grows.
double recip_partial_sum_oracle(const ReciprocalParams& p, long n, long K);

/// sum_{n>N} |a_n| = |a_{N+1}| / (1 - |ratio|); sup-norm bound on the error
/// of the N-term truncation.
double recip_tail_bound(const ReciprocalParams& p, long N);

}  // namespace trigfour
