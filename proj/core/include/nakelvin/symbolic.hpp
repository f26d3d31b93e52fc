#pragma once

#include "nakelvin/bigrat.hpp"
#include "nakelvin/errors.hpp"

#include <string>
#include <vector>

namespace nak {

// Dense polynomial over Q, ascending degree. Empty vector = zero.
using RatPoly = std::vector<BigRat>;

RatPoly poly_trim(RatPoly a);
RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b); // monic gcd
BigRat poly_eval(const RatPoly& a, const BigRat& x);
double poly_eval_d(const RatPoly& a, double x);

// Element of Q(s), s = q^(-alpha). Stored canonically: gcd(num, den) = 1,
// den monic. Laurent monomials in s live here via denominators s^k.
// Every operator value, eigenvalue and Kelvin weight in the artifact is one
// of these, so identities become decidable coefficient comparisons.
class SymbolicScalar {
public:
    SymbolicScalar() : num_{}, den_{BigRat(1)} {}
    explicit SymbolicScalar(const BigRat& c);
    SymbolicScalar(RatPoly num, RatPoly den);

    static SymbolicScalar zero() { return SymbolicScalar(); }
    static SymbolicScalar one() { return SymbolicScalar(BigRat(1)); }
    // c * s^k, any integer k
    static SymbolicScalar monomial(const BigRat& c, long k);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    SymbolicScalar operator-() const;
    SymbolicScalar operator+(const SymbolicScalar& rhs) const;
    SymbolicScalar operator-(const SymbolicScalar& rhs) const;
    SymbolicScalar operator*(const SymbolicScalar& rhs) const;
    SymbolicScalar operator/(const SymbolicScalar& rhs) const;
    SymbolicScalar& operator+=(const SymbolicScalar& rhs) { return *this = *this + rhs; }
    SymbolicScalar& operator-=(const SymbolicScalar& rhs) { return *this = *this - rhs; }
    SymbolicScalar& operator*=(const SymbolicScalar& rhs) { return *this = *this * rhs; }

    SymbolicScalar pow(long k) const;

    bool operator==(const SymbolicScalar& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

    // value at s = p^(-alpha); throws DivergenceError at a pole
    double eval_at(double alpha, double p) const;
    // exact value at a rational s
    BigRat eval_at_s(const BigRat& s) const;

    // canonical form "(num)/(den)", plain "num" when den = 1
    std::string str() const;
    // accepts the canonical form and general +,-,*,/,^ expressions in s
    static SymbolicScalar parse(const std::string& text);

private:
    void normalize();
    RatPoly num_;
    RatPoly den_;
};

// Per-shell geometric factor c * s^spow; the exact ratios of every radial
// tail and kernel mode, kept in this split form so convergence regions stay
// analytic while either scalar backend realizes powers of it.
struct MonomialRatio {
    BigRat c;
    long spow = 0;

    SymbolicScalar to_scalar() const { return SymbolicScalar::monomial(c, spow); }
    SymbolicScalar pow_scalar(long k) const;
    double eval(double alpha, double p) const;
    MonomialRatio operator*(const MonomialRatio& rhs) const { return {c * rhs.c, spow + rhs.spow}; }
};

// Open interval of admissible alpha for numeric evaluation.
struct AlphaRegion {
    double lo = 0.0;
    double hi = 1e300;

    bool empty() const { return lo >= hi; }
    bool contains(double alpha) const { return alpha > lo && alpha < hi; }
    AlphaRegion intersect(const AlphaRegion& rhs) const {
        return {std::max(lo, rhs.lo), std::min(hi, rhs.hi)};
    }
    // constraint |c * p^(-spow*alpha)| < 1
    static AlphaRegion ratio_bound(const MonomialRatio& r, double p);
};

// sum_{k >= k0} ratio^k = ratio^k0 / (1 - ratio); the engine's only
// infinite-sum closed form. Throws DivergenceError when ratio == 1.
SymbolicScalar geometric_tail(long k0, const SymbolicScalar& ratio);

// sum_{k <= k0} ratio^k = ratio^k0 / (1 - 1/ratio), the downward version.
SymbolicScalar geometric_down(long k0, const SymbolicScalar& ratio);

// paper constants, q = p.
//
// The hypersingular-integral constant of D^{alpha,n}. The printed form
// (q-1)/(1-q^(-alpha-n)) is inconsistent with the Fourier-multiplier form
// of the operator and with the inverse-operator law; the constant that
// makes both hold is (q^alpha - 1)/(1 - q^(-alpha-n)), i.e. in s:
// (1/s - 1)/(1 - p^(-n) s). That is what this returns. The `verify` reports
// carry both expressions; see scalar_c_printed for the other one.
SymbolicScalar scalar_c(int n, long p);
SymbolicScalar scalar_c_printed(int n, long p); // (p-1)/(1 - p^(-n) s)

// the one-dimensional constant of D_L^gamma over the degree-n extension:
// (1 - q^(n*gamma))/(1 - q^(-n(gamma+1))) = (1 - 1/s)/(1 - p^(-n) s)
SymbolicScalar scalar_dl(int n, long p);

// Riesz constant d_{n,gamma} = (1-q^(-n gamma))/(1-q^(n(gamma-1)))
//                            = (1-s)/(1 - p^(-n)/s)
SymbolicScalar scalar_d(int n, long p);

} // namespace nak
