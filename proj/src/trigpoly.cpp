#include <trigfour/trigpoly.hpp>

#include <cmath>
#include <vector>

namespace trigfour {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

Rational pow2_rational(long e) {
    if (e >= 0) return Rational(pow2(e));
    return make_rational(1, pow2(-e));
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    r.canonicalize();
    return r;
}

namespace {

// Map accumulation in normal form: zero entries are never kept.
void accumulate(std::map<long, Rational>& m, long key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

}  // namespace

TrigPolynomial TrigPolynomial::constant(Rational c) {
    TrigPolynomial p;
    p.constant_ = std::move(c);
    return p;
}

TrigPolynomial TrigPolynomial::cosine(long n, Rational c) {
    TrigPolynomial p;
    p.add_cos(n, c);
    return p;
}

TrigPolynomial TrigPolynomial::sine(long n, Rational c) {
    TrigPolynomial p;
    p.add_sin(n, c);
    return p;
}

Rational TrigPolynomial::cos_coeff(long n) const {
    auto it = cos_.find(n);
    return it == cos_.end() ? Rational(0) : it->second;
}

Rational TrigPolynomial::sin_coeff(long n) const {
    auto it = sin_.find(n);
    return it == sin_.end() ? Rational(0) : it->second;
}

long TrigPolynomial::max_harmonic() const {
    long m = 0;
    if (!cos_.empty()) m = cos_.rbegin()->first;
    if (!sin_.empty()) m = std::max(m, sin_.rbegin()->first);
    return m;
}

void TrigPolynomial::add_constant(const Rational& c) { constant_ += c; }

void TrigPolynomial::add_cos(long n, const Rational& c) {
    if (n < 0) n = -n;
    if (n == 0) {
        constant_ += c;
        return;
    }
    accumulate(cos_, n, c);
}

void TrigPolynomial::add_sin(long n, const Rational& c) {
    if (n == 0) return;  // sin(0t) = 0
    if (n < 0) {
        accumulate(sin_, -n, -c);
        return;
    }
    accumulate(sin_, n, c);
}

TrigPolynomial tp_combine(const TrigPolynomial& p, const TrigPolynomial& q,
                          const Rational& c, const Rational& d) {
    TrigPolynomial r;
    r.add_constant(c * p.constant_term());
    r.add_constant(d * q.constant_term());
    for (const auto& [n, a] : p.cos_terms()) r.add_cos(n, c * a);
    for (const auto& [n, a] : q.cos_terms()) r.add_cos(n, d * a);
    for (const auto& [n, b] : p.sin_terms()) r.add_sin(n, c * b);
    for (const auto& [n, b] : q.sin_terms()) r.add_sin(n, d * b);
    return r;
}

TrigPolynomial tp_mul(const TrigPolynomial& p, const TrigPolynomial& q) {
    // Flatten to (is_sin, harmonic, coeff) with the constant as cos(0t).
    struct Term {
        bool is_sin;
        long n;
        Rational c;
    };
    auto flatten = [](const TrigPolynomial& x) {
        std::vector<Term> v;
        if (x.constant_term() != 0) v.push_back({false, 0, x.constant_term()});
        for (const auto& [n, c] : x.cos_terms()) v.push_back({false, n, c});
        for (const auto& [n, c] : x.sin_terms()) v.push_back({true, n, c});
        return v;
    };

    TrigPolynomial r;
    const Rational half = make_rational(1, 2);
    for (const Term& a : flatten(p)) {
        for (const Term& b : flatten(q)) {
            Rational w = half * a.c * b.c;
            if (!a.is_sin && !b.is_sin) {
                r.add_cos(a.n - b.n, w);
                r.add_cos(a.n + b.n, w);
            } else if (a.is_sin && b.is_sin) {
                r.add_cos(a.n - b.n, w);
                r.add_cos(a.n + b.n, -w);
            } else if (a.is_sin && !b.is_sin) {
                r.add_sin(a.n - b.n, w);
                r.add_sin(a.n + b.n, w);
            } else {  // cos * sin: fold as sin(B)cos(A)
                r.add_sin(b.n - a.n, w);
                r.add_sin(b.n + a.n, w);
            }
        }
    }
    return r;
}

namespace {

// Neumaier-compensated accumulation.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

double tp_eval(const TrigPolynomial& p, double t) {
    CompensatedSum acc;
    acc.add(p.constant_term().get_d());
    for (const auto& [n, c] : p.cos_terms()) acc.add(c.get_d() * std::cos(static_cast<double>(n) * t));
    for (const auto& [n, c] : p.sin_terms()) acc.add(c.get_d() * std::sin(static_cast<double>(n) * t));
    return acc.value();
}

PowerExpansion::PowerExpansion(TrigBase base, bool cos_cofactor)
    : base_(base), cofactor_(cos_cofactor) {
    if (cofactor_ && base_ != TrigBase::Sin)
        throw std::domain_error("PowerExpansion: cos(t) cofactor requires a sin base");
}

Rational PowerExpansion::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

long PowerExpansion::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void PowerExpansion::add_term(long exponent, const Rational& c) {
    if (exponent < 0) throw std::domain_error("PowerExpansion: negative exponent");
    if (cofactor_ && exponent % 2 == 0)
        throw std::domain_error("PowerExpansion: cofactor form holds odd exponents only");
    accumulate(coeffs_, exponent, c);
}

double pe_eval(const PowerExpansion& p, double t) {
    double x = p.base() == TrigBase::Cos ? std::cos(t) : std::sin(t);
    if (p.coeffs().empty()) return 0.0;

    // Dense descending coefficient array for Horner.
    long deg = p.degree();
    std::vector<double> c(static_cast<size_t>(deg) + 1, 0.0);
    for (const auto& [e, q] : p.coeffs()) c[static_cast<size_t>(deg - e)] = q.get_d();

    // Compensated Horner: error-free transformations keep the absolute error
    // near one ulp of the true value, which the huge alternating coefficients
    // of the high-order expansions (|c| ~ 2^n, |result| <= 1) require.
    double s = c[0];
    double comp = 0.0;
    for (size_t i = 1; i < c.size(); ++i) {
        double prod = s * x;
        double prod_err = std::fma(s, x, -prod);
        double sum = prod + c[i];
        double bv = sum - prod;
        double sum_err = (prod - (sum - bv)) + (c[i] - bv);
        comp = comp * x + (prod_err + sum_err);
        s = sum;
    }
    double value = s + comp;
    return p.cos_cofactor() ? value * std::cos(t) : value;
}

}  // namespace trigfour
