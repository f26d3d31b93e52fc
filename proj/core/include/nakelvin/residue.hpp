#pragma once

#include "nakelvin/errors.hpp"

#include <vector>

namespace nak {

// Dense polynomials over F_p, coefficients in [0, p-1], ascending degree.
using FpPoly = std::vector<long>;

FpPoly fp_trim(FpPoly a);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_mod(FpPoly a, const FpPoly& m, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b, long p);
FpPoly fp_powmod(const FpPoly& base, long long e, const FpPoly& m, long p);
bool fp_is_zero(const FpPoly& a);

// Inverse of a modulo m via extended Euclid; throws DivisionByZeroError
// when a vanishes and DomainError when gcd(a, m) != 1.
FpPoly fp_invmod(const FpPoly& a, const FpPoly& m, long p);

bool fp_is_irreducible(const FpPoly& f, long p);

// Lexicographically-first monic irreducible polynomial of degree n over F_p
// (candidates ordered by their base-p constant-first encoding).
FpPoly find_irreducible(long p, int n);

std::string fp_poly_to_string(const FpPoly& f);
FpPoly fp_poly_parse(const std::string& text);

// An element of the residue field F_p[t]/(modulus), cardinality p^n.
class ResidueElement {
public:
    ResidueElement(long p, FpPoly modulus, FpPoly coeffs);

    long p() const { return p_; }
    const FpPoly& modulus() const { return modulus_; }
    const FpPoly& coeffs() const { return coeffs_; }
    bool is_zero() const { return fp_is_zero(coeffs_); }

    ResidueElement mul(const ResidueElement& rhs) const;
    ResidueElement invert() const;

    bool operator==(const ResidueElement& rhs) const {
        return p_ == rhs.p_ && modulus_ == rhs.modulus_ && coeffs_ == rhs.coeffs_;
    }

private:
    long p_;
    FpPoly modulus_;
    FpPoly coeffs_;
};

} // namespace nak
