#pragma once

#include <trigfour/integer.hpp>

namespace trigfour {

// The combinatorial kernels behind the multiple-angle expansions:
//
//   alpha(n,s)        = sum_j C(n,2j)   C(j,s)
//   alpha_prime(n,s)  = sum_j C(n,2j-1) C(j,s)
//   alpha_dprime(n,s) = sum_j C(n,2j+1) C(j,s)
//
// Each has a closed form (kernel_alpha*), and kernel_bruteforce evaluates the
// defining sum literally so the two routes can be checked against each other.
// lemma2_sum, cooc_sum and cheie_sum are the three companion identities used
// by the sine expansion and the reciprocal series.

enum class KernelKind { Alpha, AlphaPrime, AlphaDoublePrime };
enum class SumMode { ClosedForm, BruteForce };

/// alpha(n,s) = 2^(n-2s-1) (C(n-s,s) + C(n-s-1,s-1)); zero for s > floor(n/2).
Integer kernel_alpha(long n, long s);

/// alpha'(n,s) = 2^(n-2s-1) (C(n+1-s,s) + 2C(n-s,s-1) + C(n-s-1,s-2));
/// zero for s > floor((n+1)/2). alpha'(1,1) = 1 is a base value: the closed
/// form degenerates there (it would need C(-1,-1)).
Integer kernel_alpha_prime(long n, long s);

/// alpha''(n,s) = 2^(n-2s-1) C(n-s-1,s); zero for s > floor((n-1)/2).
Integer kernel_alpha_dprime(long n, long s);

/// The defining sum, term by term. Total for n >= 0, s >= 0; the closed
/// forms above require n >= 1.
Integer kernel_bruteforce(KernelKind kind, long n, long s);

/// sum_{j=1..s} C(2k,2j-1) C(k-j,s-j)  ==  2^(2s-1) C(k+s-1,2s-1),
/// for 0 <= s <= k. Both sides are zero at s = 0.
Integer lemma2_sum(long k, long s, SumMode mode);

/// sum_{s=0..t} (-1)^s (C(2l+s,s) + C(2l+s-1,s-1)) C(2t+2l,t-s).
/// Evaluates to 0 for t >= 1 and to 1 for t = 0.
Integer cooc_sum(long ell, long t);

/// sum_{k=0..l} (C(n+2k-1,k) - C(n+2k-1,k-1)) C(2(l-k),l-k) == C(n+2l,l).
/// The k = 0 summand at n = 0 is C(2l,l) (the C(-1,0) = 1 convention).
Integer cheie_sum(long n, long ell, SumMode mode);

}  // namespace trigfour
