#pragma once

#include "nakelvin/schwartz.hpp"
#include "nakelvin/symbolic.hpp"

#include <complex>
#include <utility>

namespace nak {

using Cx = std::complex<double>;

// Rank-zero additive character chi(x) = exp(2 pi i {x}_p): identically 1 on
// the integers, nontrivial one level out. The n-dimensional pairing is the
// dot product.
struct Character {
    long p;

    Cx operator()(const PAdic& x) const;
    // chi(sign * <x, xi>)
    Cx pair(const std::vector<PAdic>& x, const std::vector<PAdic>& xi, int sign = 1) const;
};

// F f(xi) = int chi(x xi) f(x) dx. The transform of a ball indicator is a
// character factor times a ball indicator; the factor is locally constant on
// the support and gets expanded into sub-balls, so the result is again an
// honest test function.
TestFunction<Cx> fourier_transform(const TestFunction<Cx>& f);
// f(x) = int chi(-x xi) Ff(xi) dxi
TestFunction<Cx> inverse_fourier(const TestFunction<Cx>& g);

// Direct Riemann-style character sum over cosets, the independent oracle
// for the closed-form transform.
Cx fourier_oracle_at(const TestFunction<Cx>& f, const std::vector<PAdic>& xi, int sign = 1);

// (D^{alpha,n} phi)(x) = F^{-1}(||xi||^alpha F phi)(x) by exact shellwise
// integration of the multiplier against the transform.
Cx vt_spectral_at(const TestFunction<Cx>& phi, const std::vector<PAdic>& x, double alpha);

// <phi, psi>_l = int max(1,||xi||)^l Fphi conj(Fpsi) dxi
Cx sobolev_inner(const TestFunction<Cx>& phi, const TestFunction<Cx>& psi, int ell);

// int |f|^2 for Plancherel checks
double l2_norm_sq(const TestFunction<Cx>& f);

// f(x) = chi(u0 . x) 1_{Z_p^n}(x) for ||u0|| = p, expanded over the p^n
// depth-1 cosets; D^{alpha,n} f = p^alpha f, i.e. eigenvalue 1/s.
std::pair<TestFunction<Cx>, SymbolicScalar> make_eigenfunction(long p, int n,
                                                               const std::vector<PAdic>& u0);

} // namespace nak
