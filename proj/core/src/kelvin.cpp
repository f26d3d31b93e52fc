#include "nakelvin/kelvin.hpp"

namespace nak {

std::vector<PAdic> invert_point(const ExtCtxPtr& ctx, const std::vector<PAdic>& x) {
    bool all_zero = true;
    for (const PAdic& c : x) {
        if (!c.is_zero()) {
            all_zero = false;
        } else if (!c.is_exact_zero()) {
            // a coordinate that only looks like zero cannot be trusted here
            if (all_zero) throw PrecisionError("point too close to the origin to invert");
        }
    }
    if (all_zero) throw DomainError("inversion undefined at the origin");
    return iso_U_inv(iso_U(ctx, x).invert());
}

BallImage image_ball(const ExtCtxPtr& ctx, const Ball& b) {
    auto w = b.center_norm_exp();
    if (!w || -b.radius_exp() >= *w) {
        throw PreconditionError("ball contains the origin; use the radial-tail branch");
    }
    std::vector<PAdic> jc = invert_point(ctx, b.center());
    long r_img = b.radius_exp() + 2 * *w; // radius / ||center||^2
    return {Ball(b.p(), std::move(jc), r_img), -*w};
}

KelvinCheck kelvin_identity_sides(const ExtCtxPtr& ctx, const TestFunction<SymbolicScalar>& u,
                                  const std::vector<PAdic>& x, AlphaRegion* region) {
    ExactOps ops;
    PiecewiseRadial<SymbolicScalar> uprf(u.canonical() ? u : u.canonicalize());
    PiecewiseRadial<SymbolicScalar> ku = kelvin_transform(ctx, u, ops);
    return kelvin_identity_sides(ctx, uprf, ku, x, region);
}

KelvinCheck kelvin_identity_sides(const ExtCtxPtr& ctx,
                                  const PiecewiseRadial<SymbolicScalar>& uprf,
                                  const PiecewiseRadial<SymbolicScalar>& ku,
                                  const std::vector<PAdic>& x, AlphaRegion* region) {
    auto h = vec_norm_exp(x);
    if (!h) throw DomainError("the Kelvin identity is stated for x != 0");
    const int n = uprf.n();
    if (region) *region = region->intersect(AlphaRegion{0.0, static_cast<double>(n)});
    std::vector<PAdic> jx = invert_point(ctx, x);
    SymbolicScalar lhs = vt_exact(uprf, jx, n, region);
    SymbolicScalar weight = SymbolicScalar::monomial(rat_pow(uprf.p(), *h * n), -*h); // ||x||^(alpha+n)
    SymbolicScalar rhs_op = vt_exact(ku, x, n, region);
    return {std::move(lhs), std::move(rhs_op), std::move(weight), std::move(jx), *h};
}

SymbolicScalar verify_kelvin_identity(const ExtCtxPtr& ctx, const TestFunction<SymbolicScalar>& u,
                                      const std::vector<PAdic>& x, AlphaRegion* region) {
    return kelvin_identity_sides(ctx, u, x, region).residual();
}

SymbolicScalar kelvin_identity_residual_samepoint(const ExtCtxPtr& ctx,
                                                  const TestFunction<SymbolicScalar>& u,
                                                  const std::vector<PAdic>& x) {
    auto h = vec_norm_exp(x);
    if (!h) throw DomainError("the Kelvin identity is stated for x != 0");
    const int n = u.n();
    ExactOps ops;
    PiecewiseRadial<SymbolicScalar> uprf(u.canonical() ? u : u.canonicalize());
    PiecewiseRadial<SymbolicScalar> ku = kelvin_transform(ctx, u, ops);
    SymbolicScalar lhs = vt_exact(uprf, x, n);
    SymbolicScalar weight = SymbolicScalar::monomial(rat_pow(u.p(), *h * n), -*h);
    SymbolicScalar rhs = weight * vt_exact(ku, x, n);
    return lhs - rhs;
}

ChainCheck chain_sides(const ExtCtxPtr& ctx, const TestFunction<SymbolicScalar>& f,
                       const std::vector<PAdic>& x, AlphaRegion* region) {
    auto hx = vec_norm_exp(x);
    if (!hx) throw DomainError("the chain identity is stated for x != 0");
    const long p = f.p();
    const int n = f.n();
    TestFunction<SymbolicScalar> canon = f.canonical() ? f : f.canonicalize();
    for (const auto& term : canon.terms()) {
        if (term.ball.contains_origin()) {
            throw PreconditionError("f must vanish on a neighbourhood of 0: the weight |.|^(-gamma-1) is singular there");
        }
    }
    if (region) *region = region->intersect(AlphaRegion{0.0, static_cast<double>(n)});

    // f*(y) = f(1/y): push every ball through J
    TestFunction<SymbolicScalar> fstar(p, n);
    // |.|^(-gamma-1) f: the norm is constant on each ball of f
    TestFunction<SymbolicScalar> weighted(p, n);
    for (const auto& term : canon.terms()) {
        BallImage img = image_ball(ctx, term.ball);
        fstar.add_term(img.ball, term.coeff);
        long w = *term.ball.center_norm_exp();
        // |z|_L^(-gamma-1) = p^(-n w) s^w  on ||z|| = p^w
        weighted.add_term(term.ball,
                          term.coeff * SymbolicScalar::monomial(rat_pow(p, -n * w), w));
    }
    std::vector<PAdic> xstar = invert_point(ctx, x);
    SymbolicScalar lhs = riesz_exact(PiecewiseRadial<SymbolicScalar>(fstar), xstar, n, region);
    // |x*|_L^(gamma-1) = p^(n hx) s^hx for ||x|| = p^hx
    SymbolicScalar outer = SymbolicScalar::monomial(rat_pow(p, n * *hx), *hx);
    SymbolicScalar rhs =
        outer * riesz_exact(PiecewiseRadial<SymbolicScalar>(weighted), x, n, region);
    return {std::move(lhs), std::move(rhs), std::move(fstar), std::move(weighted),
            std::move(xstar), std::move(outer)};
}

SymbolicScalar verify_riesz_inversion_chain(const ExtCtxPtr& ctx,
                                            const TestFunction<SymbolicScalar>& f,
                                            const std::vector<PAdic>& x, AlphaRegion* region) {
    ChainCheck c = chain_sides(ctx, f, x, region);
    return c.lhs - c.rhs;
}

double verify_harmonicity(const ExtCtxPtr& ctx, const TestFunction<std::complex<double>>& u,
                          const RadialRegion& G, const std::vector<std::vector<PAdic>>& points,
                          double alpha) {
    RadialRegion jg = G.inverted();
    NumericOps ops{alpha, static_cast<double>(u.p())};
    PiecewiseRadial<std::complex<double>> ku = kelvin_transform(ctx, u, ops);
    double worst = 0.0;
    for (const auto& x : points) {
        auto h = vec_norm_exp(x);
        if (!h || !jg.contains(*h)) {
            throw PreconditionError("evaluation point outside J(G) \\ {0}");
        }
        worst = std::max(worst, std::abs(vt_numeric(ku, x, alpha)));
    }
    return worst;
}

} // namespace nak
