#pragma once

#include "nakelvin/symbolic.hpp"

#include <cmath>
#include <complex>

namespace nak {

// The two coefficient backends: exact rational functions of s = p^(-alpha),
// and complex doubles at a fixed numeric alpha (the Fourier pipeline).

inline SymbolicScalar coeff_from_rat(const BigRat& r, const SymbolicScalar*) {
    return SymbolicScalar(r);
}
inline std::complex<double> coeff_from_rat(const BigRat& r, const std::complex<double>*) {
    return {to_double(r), 0.0};
}
inline std::complex<long double> coeff_from_rat(const BigRat& r, const std::complex<long double>*) {
    return {to_long_double(r), 0.0L};
}

template <class C>
C coeff_from_rat(const BigRat& r) {
    return coeff_from_rat(r, static_cast<const C*>(nullptr));
}

inline bool coeff_is_zero(const SymbolicScalar& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == 0.0; }
inline bool coeff_is_zero(const std::complex<long double>& c) { return c == 0.0L; }

// Exact backend: powers of s stay symbolic, geometric sums stay rational
// functions, zero tests are exact.
struct ExactOps {
    using Scalar = SymbolicScalar;

    Scalar from_rat(const BigRat& r) const { return SymbolicScalar(r); }
    Scalar ratio_pow(const MonomialRatio& m, long k) const { return m.pow_scalar(k); }
    bool is_zero(const Scalar& c) const { return c.is_zero(); }

    Scalar geom_tail(long k0, const MonomialRatio& r) const {
        return geometric_tail(k0, r.to_scalar());
    }
    Scalar geom_down(long k0, const MonomialRatio& r) const {
        return geometric_down(k0, r.to_scalar());
    }
};

// Extended-precision backend for the brute-force oracle: the inner-shell
// kernel spans enough orders of magnitude that double accumulation loses
// digits the 1e-12 oracle gate needs.
struct OracleOps {
    using Scalar = std::complex<long double>;

    long double alpha;
    long double p;

    Scalar from_rat(const BigRat& r) const { return {to_long_double(r), 0.0L}; }
    Scalar ratio_pow(const MonomialRatio& m, long k) const {
        long double base = to_long_double(m.c) * std::pow(p, -alpha * static_cast<long double>(m.spow));
        return {std::pow(base, static_cast<long double>(k)), 0.0L};
    }
    bool is_zero(const Scalar& c) const { return c == 0.0L; }

    Scalar geom_tail(long k0, const MonomialRatio& r) const {
        long double rv = to_long_double(r.c) * std::pow(p, -alpha * static_cast<long double>(r.spow));
        if (std::abs(rv) >= 1.0L) {
            throw DivergenceError("geometric tail diverges at this alpha");
        }
        return {std::pow(rv, static_cast<long double>(k0)) / (1.0L - rv), 0.0L};
    }
    Scalar geom_down(long k0, const MonomialRatio& r) const {
        long double rv = to_long_double(r.c) * std::pow(p, -alpha * static_cast<long double>(r.spow));
        if (std::abs(rv) <= 1.0L) {
            throw DivergenceError("downward geometric sum diverges at this alpha");
        }
        return {std::pow(rv, static_cast<long double>(k0)) / (1.0L - 1.0L / rv), 0.0L};
    }
};

// Numeric backend at fixed alpha; geometric sums check |ratio| against 1
// before using the closed form.
struct NumericOps {
    using Scalar = std::complex<double>;

    double alpha;
    double p;

    Scalar from_rat(const BigRat& r) const { return {to_double(r), 0.0}; }
    Scalar ratio_pow(const MonomialRatio& m, long k) const {
        double base = m.eval(alpha, p);
        return {std::pow(base, static_cast<double>(k)), 0.0};
    }
    bool is_zero(const Scalar& c) const { return c == 0.0; }

    Scalar geom_tail(long k0, const MonomialRatio& r) const {
        double rv = r.eval(alpha, p);
        if (std::abs(rv) >= 1.0) {
            throw DivergenceError("geometric tail diverges at alpha = " + std::to_string(alpha));
        }
        return {std::pow(rv, static_cast<double>(k0)) / (1.0 - rv), 0.0};
    }
    Scalar geom_down(long k0, const MonomialRatio& r) const {
        double rv = r.eval(alpha, p);
        if (std::abs(rv) <= 1.0) {
            throw DivergenceError("downward geometric sum diverges at alpha = " + std::to_string(alpha));
        }
        return {std::pow(rv, static_cast<double>(k0)) / (1.0 - 1.0 / rv), 0.0};
    }
};

} // namespace nak
