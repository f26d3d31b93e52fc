#pragma once

#include "nakelvin/extension.hpp"
#include "nakelvin/vt.hpp"

namespace nak {

// The inversion J = U^{-1} (x -> 1/x) U of K^n, through the field structure
// of the unramified extension. ||J(x)|| = ||x||^{-1} exactly.
std::vector<PAdic> invert_point(const ExtCtxPtr& ctx, const std::vector<PAdic>& x);

// J maps a ball not containing 0 bijectively onto a ball; ||.|| is constant
// on the image. Returns the image ball and e with ||.|| = p^e there.
struct BallImage {
    Ball ball;
    long norm_exp;
};
BallImage image_ball(const ExtCtxPtr& ctx, const Ball& b);

// (K u)(x) = ||x||^(alpha - n) u(J(x)) for x != 0, 0 at the origin.
// Terms on balls away from 0 map to weighted indicators of image balls;
// a term on a ball around 0 becomes a radial tail with per-shell ratio
// ||x||^(alpha-n) = (p^-n / s)^k.
// Linear in the representation, so overlapping term lists transform
// termwise; no refinement to a common radius is ever needed.
template <class C, class Ops>
PiecewiseRadial<C> kelvin_transform(const ExtCtxPtr& ctx, const TestFunction<C>& u, const Ops& ops) {
    PiecewiseRadial<C> out(u.p(), u.n());
    const long p = u.p();
    const int n = u.n();
    MonomialRatio weight{rat_pow(p, -n), -1}; // ||x||^(alpha-n) per shell
    for (const auto& term : u.terms()) {
        if (term.ball.contains_origin()) {
            RadialTail<C> tail;
            tail.center = origin(p, n);
            tail.start_shell = term.ball.radius_exp();
            tail.base = term.coeff;
            tail.ratio = weight;
            out.tails.push_back(std::move(tail));
        } else {
            BallImage img = image_ball(ctx, term.ball);
            out.compact.add_term(img.ball, term.coeff * ops.ratio_pow(weight, img.norm_exp));
        }
    }
    return out;
}

// Both sides of the Kelvin identity at x != 0:
//   lhs = (D^{alpha,n} u)(J(x)),  rhs = ||x||^(alpha+n) * (D^{alpha,n} K u)(x).
// The identity asserts lhs == rhs in Q(s) on test functions. The source
// states it with both sides at the same point; that form has a nonzero
// residual (see kelvin_identity_residual_samepoint) and contradicts its own
// harmonicity corollary, which needs the inverted argument.
struct KelvinCheck {
    SymbolicScalar lhs;     // (D u)(J(x))
    SymbolicScalar rhs_op;  // (D K u)(x)
    SymbolicScalar weight;  // ||x||^(alpha+n), an exact monomial
    std::vector<PAdic> jx;
    long x_norm_exp;

    SymbolicScalar rhs() const { return weight * rhs_op; }
    SymbolicScalar residual() const { return lhs - rhs(); }
};
KelvinCheck kelvin_identity_sides(const ExtCtxPtr& ctx, const TestFunction<SymbolicScalar>& u,
                                  const std::vector<PAdic>& x, AlphaRegion* region = nullptr);

// the same with u and K u prepared once by the caller, for sweeps
KelvinCheck kelvin_identity_sides(const ExtCtxPtr& ctx,
                                  const PiecewiseRadial<SymbolicScalar>& uprf,
                                  const PiecewiseRadial<SymbolicScalar>& ku,
                                  const std::vector<PAdic>& x, AlphaRegion* region = nullptr);

SymbolicScalar verify_kelvin_identity(const ExtCtxPtr& ctx, const TestFunction<SymbolicScalar>& u,
                                      const std::vector<PAdic>& x, AlphaRegion* region = nullptr);

// the same-point form, kept as a computable witness of the erratum
SymbolicScalar kelvin_identity_residual_samepoint(const ExtCtxPtr& ctx,
                                                  const TestFunction<SymbolicScalar>& u,
                                                  const std::vector<PAdic>& x);

// Both sides of the change-of-variables chain for the Riesz potential:
//   lhs = (D^{-gamma} f*)(x*),
//   rhs = |x*|^(gamma-1) D^{-gamma}(|.|^(-gamma-1) f)(x),
// for f vanishing on a neighbourhood of 0 and x != 0.
struct ChainCheck {
    SymbolicScalar lhs;
    SymbolicScalar rhs;
    TestFunction<SymbolicScalar> fstar;
    TestFunction<SymbolicScalar> weighted;
    std::vector<PAdic> xstar;
    SymbolicScalar outer_weight;
};
ChainCheck chain_sides(const ExtCtxPtr& ctx, const TestFunction<SymbolicScalar>& f,
                       const std::vector<PAdic>& x, AlphaRegion* region = nullptr);

SymbolicScalar verify_riesz_inversion_chain(const ExtCtxPtr& ctx,
                                            const TestFunction<SymbolicScalar>& f,
                                            const std::vector<PAdic>& x,
                                            AlphaRegion* region = nullptr);

// Radial region p^min_exp <= ||x|| <= p^max_exp (either bound optional).
struct RadialRegion {
    std::optional<long> min_exp;
    std::optional<long> max_exp;

    bool contains(long e) const {
        if (min_exp && e < *min_exp) return false;
        if (max_exp && e > *max_exp) return false;
        return true;
    }
    // image under J: norms invert
    RadialRegion inverted() const {
        RadialRegion out;
        if (max_exp) out.min_exp = -*max_exp;
        if (min_exp) out.max_exp = -*min_exp;
        return out;
    }
};

// max |D^{alpha,n}(K u)(x)| over the points, all of which must lie in
// J(G) \ {0}; the harmonicity corollary asserts 0 when D^{alpha,n}u = 0 on G.
double verify_harmonicity(const ExtCtxPtr& ctx, const TestFunction<std::complex<double>>& u,
                          const RadialRegion& G, const std::vector<std::vector<PAdic>>& points,
                          double alpha);

} // namespace nak
