#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakelvin/sampling.hpp"
#include "nakelvin/vt.hpp"

#include <cmath>

using namespace nak;

namespace {

using Cx = std::complex<double>;
using STF = TestFunction<SymbolicScalar>;
using SPRF = PiecewiseRadial<SymbolicScalar>;

SPRF wrap(const STF& f) { return SPRF(f.canonicalize()); }

// every symbolic value is accepted only after the oracle agrees at three
// alpha samples
void check_against_oracle(const SymbolicScalar& value, const SPRF& u,
                          const std::vector<PAdic>& x, double hi_alpha = 1.5) {
    double p = static_cast<double>(u.p());
    for (double alpha : {0.5, 1.0, hi_alpha}) {
        Cx oracle = shell_sum_oracle_vt(to_numeric(u, alpha), x, alpha, 1e-14);
        CHECK(std::abs(value.eval_at(alpha, p) - oracle.real()) < 1e-12);
        CHECK(std::abs(oracle.imag()) < 1e-14);
    }
}

const SymbolicScalar one = SymbolicScalar::one();

} // namespace

TEST_CASE("vt of the unit ball indicator, interior point") {
    // frozen closed form for p=2, n=2: (1-p^-n)/(1 - p^-n s) = 3/(4-s)
    STF f = STF::indicator(Ball::unit(2, 2), one);
    SPRF u = wrap(f);
    SymbolicScalar v = vt_exact(u, origin(2, 2), 2);
    CHECK(v == SymbolicScalar::parse("3/(4-s)"));
    CHECK(std::abs(v.eval_at(1.0, 2.0) - 6.0 / 7.0) < 1e-14);
    check_against_oracle(v, u, origin(2, 2));

    // same interior value across the shell ||x|| <= 1
    Sampler smp(31);
    for (long p : {2L, 3L, 5L}) {
        for (int n : {2, 3}) {
            STF g = STF::indicator(Ball::unit(p, n), one);
            SPRF w = wrap(g);
            SymbolicScalar inside = vt_exact(w, smp.point_with_norm(p, n, smp.uniform(-2, 0)), n);
            SymbolicScalar expect =
                (one - SymbolicScalar(rat_pow(p, -n))) /
                (one - SymbolicScalar::monomial(rat_pow(p, -n), 1));
            CHECK(inside == expect);
        }
    }
}

TEST_CASE("vt of a ball indicator at an exterior point is one shell term") {
    Sampler smp(77);
    for (long p : {2L, 3L}) {
        int n = 2;
        for (long r : {1L, 2L}) {
            STF f = STF::indicator(Ball(p, origin(p, n), r), one);
            SPRF u = wrap(f);
            for (long d : {1L, 2L, 3L}) {
                auto x = smp.point_with_norm(p, n, d);
                SymbolicScalar v = vt_exact(u, x, n);
                SymbolicScalar expect = SymbolicScalar::zero() -
                                        scalar_c(n, p) * SymbolicScalar(rat_pow(p, -r * n)) *
                                            SymbolicScalar::monomial(rat_pow(p, -d * n), d);
                CHECK(v == expect);
                check_against_oracle(v, u, x);
            }
        }
    }
}

TEST_CASE("vt of zero is zero everywhere") {
    SPRF z(3, 2);
    Sampler smp(5);
    CHECK(vt_exact(z, smp.point_with_norm(3, 2, 2), 2).is_zero());
    CHECK(vt_exact(z, origin(3, 2), 2).is_zero());
}

TEST_CASE("linearity, translation invariance, dilation covariance") {
    long p = 3;
    int n = 2;
    Sampler smp(123);
    STF f = STF::indicator(smp.ball(p, n, 0, 1), SymbolicScalar(BigRat(2)));
    STF g = STF::indicator(Ball::unit(p, n), SymbolicScalar(BigRat(-1, 3)));
    STF sum = f + g;
    for (int i = 0; i < 8; ++i) {
        auto x = smp.point_with_norm(p, n, smp.uniform(-2, 2));
        CHECK(vt_exact(wrap(sum), x, n) == vt_exact(wrap(f), x, n) + vt_exact(wrap(g), x, n));

        auto a = smp.point_with_norm(p, n, smp.uniform(-1, 1));
        // (D u(.-a))(x) = (D u)(x-a)
        CHECK(vt_exact(wrap(f.translated(a)), x, n) == vt_exact(wrap(f), vec_sub(x, a), n));

        // (D u(p^v .))(x) = |p^v|^alpha (D u)(p^v x) = s^v (D u)(p^v x)
        long v = smp.uniform(-2, 2);
        std::vector<PAdic> lx;
        for (const PAdic& c : x) lx.push_back(c.shift(v));
        CHECK(vt_exact(wrap(f.scaled_arg(v)), x, n) ==
              SymbolicScalar::monomial(BigRat(1), v) * vt_exact(wrap(f), lx, n));
    }
}

TEST_CASE("engines are representation-independent") {
    // overlapping raw term lists and the canonical refinement are the same
    // function; every engine is linear, so the results must coincide exactly
    long p = 3;
    int n = 2;
    Sampler smp(777);
    STF raw(p, n);
    raw.add_term(Ball::unit(p, n), one);
    raw.add_term(smp.ball(p, n, 0, 1), SymbolicScalar(BigRat(-2)));
    raw.add_term(smp.ball(p, n, 1, 2), SymbolicScalar(BigRat(1, 3)));
    SPRF as_raw(raw);
    SPRF as_canon(raw.canonicalize());
    for (int i = 0; i < 10; ++i) {
        auto x = smp.point_with_norm(p, n, smp.uniform(-3, 3));
        CHECK(vt_exact(as_raw, x, n) == vt_exact(as_canon, x, n));
        CHECK(riesz_exact(as_raw, x, n) == riesz_exact(as_canon, x, n));
    }
}

TEST_CASE("materialized image agrees with pointwise evaluation") {
    long p = 2;
    int n = 2;
    Sampler smp(321);
    STF f(p, n);
    f.add_term(Ball::unit(p, n), one);
    f.add_term(smp.ball(p, n, 1, 0), SymbolicScalar(BigRat(-1, 2)));
    ExactOps ops;
    PiecewiseRadial<SymbolicScalar> img = vt_image(f.canonicalize(), scalar_c(n, p), ops);
    for (int i = 0; i < 12; ++i) {
        auto y = smp.point_with_norm(p, n, smp.uniform(-3, 3));
        CHECK(evaluate_piecewise(img, y, ops) == vt_exact(wrap(f), y, n));
    }
}

TEST_CASE("dimensional reduction: the operator over L matches vt") {
    Sampler smp(888);
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            STF f(p, n);
            f.add_term(Ball::unit(p, n), one);
            f.add_term(smp.ball(p, n, 0, 2), SymbolicScalar(BigRat(1, 2)));
            SPRF u = wrap(f);
            for (int i = 0; i < 6; ++i) {
                auto x = smp.point_with_norm(p, n, smp.uniform(-2, 2));
                CHECK(dl_exact(u, x, n) == vt_exact(u, x, n));
            }
        }
    }
}

TEST_CASE("the printed Eq. (2-1) constant is the consistent candidate") {
    long p = 3;
    int n = 2;
    STF f = STF::indicator(Ball::unit(p, n), one);
    SPRF u = wrap(f);
    Sampler smp(11);
    auto x = smp.point_with_norm(p, n, 1);
    for (double alpha : {0.5, 1.0, 1.5}) {
        auto nm = to_numeric(u, alpha);
        Cx vt = shell_sum_oracle_vt(nm, x, alpha, 1e-14);
        Cx printed = shell_sum_oracle_dl(nm, x, alpha, 1e-14, 0);
        Cx dropped_n = shell_sum_oracle_dl(nm, x, alpha, 1e-14, 1);
        CHECK(std::abs(vt - printed) < 1e-12);
        if (alpha != 1.0 || p != 2) CHECK(std::abs(vt - dropped_n) > 1e-6);
    }
}

TEST_CASE("riesz inverts vt exactly in Q(s)") {
    Sampler smp(2024);
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            STF f(p, n);
            f.add_term(Ball::unit(p, n), one);
            f.add_term(smp.ball(p, n, 1, 1), SymbolicScalar(BigRat(3, 2)));
            STF canon = f.canonicalize();
            ExactOps ops;
            PiecewiseRadial<SymbolicScalar> img = vt_image(canon, scalar_c(n, p), ops);
            for (int i = 0; i < 6; ++i) {
                auto x = smp.point_with_norm(p, n, smp.uniform(-2, 2));
                SymbolicScalar back = riesz_exact(img, x, n);
                CHECK(back == canon.evaluate(x));
            }
        }
    }
}

TEST_CASE("riesz of the unit ball against the oracle") {
    long p = 2;
    int n = 2;
    STF f = STF::indicator(Ball::unit(p, n), one);
    SPRF u = wrap(f);
    SymbolicScalar v = riesz_exact(u, origin(p, n), n);
    SymbolicScalar expect = scalar_d(n, p) * (one - SymbolicScalar(rat_pow(p, -n))) /
                            (one - SymbolicScalar::monomial(BigRat(1), 1));
    CHECK(v == expect);
    for (double alpha : {0.5, 1.0, 1.5}) {
        Cx oracle = shell_sum_oracle_riesz(to_numeric(u, alpha), origin(p, n), alpha, 1e-14);
        CHECK(std::abs(v.eval_at(alpha, 2.0) - oracle.real()) < 1e-12);
    }
}

TEST_CASE("alpha-range policy") {
    STF f = STF::indicator(Ball::unit(2, 2), one);
    auto nf = to_numeric_tf(f, 2.5);
    PiecewiseRadial<Cx> u(nf);
    CHECK_THROWS_AS(riesz_numeric(u, origin(2, 2), 2.5), DivergenceError);
    CHECK_THROWS_AS(vt_numeric(u, origin(2, 2), -1.0), DomainError);

    // the convergence region of a vt evaluation of a compact function is alpha > 0
    AlphaRegion region;
    (void)vt_exact(wrap(f), origin(2, 2), 2, &region);
    CHECK(region.contains(0.1));
    CHECK(region.contains(50.0));
}
