#pragma once

#include <trigfour/integer.hpp>

#include <map>

namespace trigfour {

/// Finite Fourier-basis element  c + sum a_n cos(nt) + sum b_n sin(nt) with
/// exact rational coefficients. The constant term is stored as its actual
/// value (i.e. a0/2 in the usual convention). Normal form throughout: no zero
/// coefficients are kept and every stored harmonic index is >= 1, so equality
/// of values is equality of representations.
class TrigPolynomial {
  public:
    TrigPolynomial() = default;

    static TrigPolynomial constant(Rational c);
    /// c * cos(nt) / c * sin(nt); negative n folds via cos(-nt) = cos(nt),
    /// sin(-nt) = -sin(nt), and n = 0 collapses into the constant (sin -> 0).
    static TrigPolynomial cosine(long n, Rational c);
    static TrigPolynomial sine(long n, Rational c);

    const Rational& constant_term() const { return constant_; }
    const std::map<long, Rational>& cos_terms() const { return cos_; }
    const std::map<long, Rational>& sin_terms() const { return sin_; }

    Rational cos_coeff(long n) const;  // 0 when absent
    Rational sin_coeff(long n) const;
    long max_harmonic() const;  // 0 for a constant

    void add_constant(const Rational& c);
    void add_cos(long n, const Rational& c);
    void add_sin(long n, const Rational& c);

    bool is_zero() const { return constant_ == 0 && cos_.empty() && sin_.empty(); }
    bool operator==(const TrigPolynomial&) const = default;

  private:
    Rational constant_;
    std::map<long, Rational> cos_;
    std::map<long, Rational> sin_;
};

/// c*p + d*q.
TrigPolynomial tp_combine(const TrigPolynomial& p, const TrigPolynomial& q,
                          const Rational& c, const Rational& d);

/// Exact product via the product-to-sum identities
///   cosA cosB = (cos(A-B) + cos(A+B)) / 2
///   sinA sinB = (cos(A-B) - cos(A+B)) / 2
///   sinA cosB = (sin(A-B) + sin(A+B)) / 2.
TrigPolynomial tp_mul(const TrigPolynomial& p, const TrigPolynomial& q);

/// Floating-point evaluation at t. Exactness lives in the coefficients; this
/// is a test aid.
double tp_eval(const TrigPolynomial& p, double t);

enum class TrigBase { Cos, Sin };

/// Polynomial in cos(t) or sin(t), optionally times a single cos(t) cofactor
/// (the shape of the even-index sine expansion, where the cofactor comes with
/// odd powers of sin(t) only).
class PowerExpansion {
  public:
    PowerExpansion() = default;
    PowerExpansion(TrigBase base, bool cos_cofactor);

    TrigBase base() const { return base_; }
    bool cos_cofactor() const { return cofactor_; }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(long exponent) const;  // 0 when absent
    long degree() const;                  // 0 when empty

    /// Accumulates c * base^exponent, keeping normal form. Enforces the
    /// cofactor shape: with a cos(t) cofactor the base must be Sin and every
    /// exponent odd.
    void add_term(long exponent, const Rational& c);

    bool operator==(const PowerExpansion&) const = default;

  private:
    TrigBase base_ = TrigBase::Cos;
    bool cofactor_ = false;
    std::map<long, Rational> coeffs_;
};

/// Evaluates sum coeffs[e] * base(t)^e (times cos t if the cofactor is set)
/// with a compensated Horner scheme, so the result is faithful to the exact
/// polynomial even when coefficients are huge and cancellation is total.
double pe_eval(const PowerExpansion& p, double t);

}  // namespace trigfour
