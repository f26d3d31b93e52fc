#pragma once

#include "nakelvin/padic.hpp"
#include "nakelvin/residue.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nak {

// The unramified degree-n extension L of Q_p, realized as
// Q_p[t]/(modulus) with modulus monic of degree n and irreducible mod p.
// The power basis 1, t, ..., t^(n-1) lifts a basis of the residue-field
// extension, so it is the canonical basis and p stays a uniformizer of L.
class ExtensionContext {
public:
    ExtensionContext(long p, int n);

    long p() const { return p_; }
    int n() const { return n_; }
    const FpPoly& modulus() const { return modulus_; }

    // "p=2;n=2;modulus=t^2+t+1", embedded in every report.
    std::string describe() const;

    // Process-wide cache; one context per (p, n), created once.
    static std::shared_ptr<const ExtensionContext> get(long p, int n);

private:
    long p_;
    int n_;
    FpPoly modulus_;
};

using ExtCtxPtr = std::shared_ptr<const ExtensionContext>;

// Element of L as coordinates over the canonical basis.
class ExtElement {
public:
    ExtElement(ExtCtxPtr ctx, std::vector<PAdic> coords);

    const ExtCtxPtr& ctx() const { return ctx_; }
    const std::vector<PAdic>& coords() const { return coords_; }

    bool is_zero() const;

    // max norm: ||x||_L = max_j |x_j|; returns the exponent e with ||x|| = p^e.
    std::optional<long> max_norm_exp() const;
    // normalized absolute value: |x|_L = ||x||_L^n, exponent n*e.
    std::optional<long> abs_exp() const;

    ExtElement operator+(const ExtElement& rhs) const;
    ExtElement operator-(const ExtElement& rhs) const;
    ExtElement operator*(const ExtElement& rhs) const;

    // Unit factorization + residue seed + Newton lifting.
    ExtElement invert() const;

    // Residue of an integral element (all valuations >= 0).
    ResidueElement residue() const;

    static ExtElement one(const ExtCtxPtr& ctx, int precision = kDefaultPrecision);
    static ExtElement zero(const ExtCtxPtr& ctx);

private:
    ExtCtxPtr ctx_;
    std::vector<PAdic> coords_;
};

// The isometric isomorphism U between K^n and L: coordinatewise on the
// canonical basis. Wrong vector length is a domain error.
ExtElement iso_U(const ExtCtxPtr& ctx, const std::vector<PAdic>& v);
std::vector<PAdic> iso_U_inv(const ExtElement& a);


} // namespace nak
