#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakelvin/symbolic.hpp"

#include <cmath>
#include <random>

using namespace nak;

namespace {

std::mt19937_64 rng(5150);
long rnd(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

SymbolicScalar random_scalar() {
    RatPoly num, den;
    int dn = static_cast<int>(rnd(0, 3));
    for (int i = 0; i <= dn; ++i) num.push_back(BigRat(rnd(-6, 6), rnd(1, 4)));
    int dd = static_cast<int>(rnd(0, 2));
    for (int i = 0; i <= dd; ++i) den.push_back(BigRat(rnd(-6, 6), rnd(1, 4)));
    den.push_back(BigRat(1)); // keep the denominator nonzero
    return SymbolicScalar(std::move(num), std::move(den));
}

const SymbolicScalar s = SymbolicScalar::monomial(BigRat(1), 1);

} // namespace

TEST_CASE("canonical representation") {
    // (s^2 - 1)/(s - 1) = s + 1
    SymbolicScalar a = (s * s - SymbolicScalar::one()) / (s - SymbolicScalar::one());
    CHECK(a == s + SymbolicScalar::one());
    CHECK(a.str() == "1 + s");

    CHECK(SymbolicScalar::monomial(BigRat(3), -2).str() == "(3)/(s^2)");
    CHECK((s - s).is_zero());
    CHECK(SymbolicScalar::zero().str() == "0");
}

TEST_CASE("field axioms on random elements") {
    for (int i = 0; i < 60; ++i) {
        SymbolicScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + (b + c) == (a + b) + c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a - a == SymbolicScalar::zero());
    }
}

TEST_CASE("evaluation matches direct floating-point recomputation") {
    SymbolicScalar expr = (SymbolicScalar(BigRat(3)) * s) /
                          ((SymbolicScalar::one() - s) * (SymbolicScalar(BigRat(4)) - s));
    for (double alpha : {0.1, 0.5, 1.0, 1.5, 1.9}) {
        double sv = std::pow(2.0, -alpha);
        double direct = 3 * sv / ((1 - sv) * (4 - sv));
        CHECK(std::abs(expr.eval_at(alpha, 2.0) - direct) < 1e-12);
    }
    CHECK(expr.eval_at_s(BigRat(1, 2)) == BigRat(6, 7));
}

TEST_CASE("parse round trips and factored input") {
    for (int i = 0; i < 40; ++i) {
        SymbolicScalar a = random_scalar();
        CHECK(SymbolicScalar::parse(a.str()) == a);
    }
    SymbolicScalar built = (SymbolicScalar(BigRat(3)) * s) /
                           ((SymbolicScalar::one() - s) * (SymbolicScalar(BigRat(4)) - s));
    CHECK(SymbolicScalar::parse("(3*s)/((1-s)*(4-s))") == built);
    CHECK(SymbolicScalar::parse("s^-2") == SymbolicScalar::monomial(BigRat(1), -2));
    CHECK_THROWS_AS(SymbolicScalar::parse("3 +"), ParseError);
}

TEST_CASE("operator constants") {
    // corrected c_{n,alpha} = (q^alpha - 1)/(1 - q^(-alpha-n)); at alpha = 1,
    // p = 2 it agrees with the printed (q-1)/(1-q^(-alpha-n)), elsewhere not
    SymbolicScalar c = scalar_c(2, 2);
    SymbolicScalar cp = scalar_c_printed(2, 2);
    CHECK(std::abs(c.eval_at(1.0, 2.0) - 8.0 / 7.0) < 1e-14);
    CHECK(std::abs(cp.eval_at(1.0, 2.0) - 8.0 / 7.0) < 1e-14);
    CHECK(std::abs(c.eval_at(0.5, 2.0) - cp.eval_at(0.5, 2.0)) > 0.1);
    CHECK(cp == SymbolicScalar::parse("1/(1 - s/4)"));
    CHECK(scalar_c_printed(2, 3) == SymbolicScalar::parse("2/(1 - s/9)"));
    // substituting s = 0 in the printed constant gives p - 1
    CHECK(cp.eval_at_s(BigRat(0)) == BigRat(1));

    // c and the Eq. (2-1) constant differ exactly by the integrand sign
    CHECK(scalar_dl(2, 2) == -scalar_c(2, 2));
    CHECK(scalar_dl(3, 5) == -scalar_c(3, 5));
}

TEST_CASE("Riesz constant and its gamma = 1 pole") {
    SymbolicScalar d = scalar_d(2, 2);
    // pole at s = p^-n, i.e. alpha = n
    CHECK_THROWS_AS(d.eval_at_s(BigRat(1, 4)), DivergenceError);
    CHECK_NOTHROW(d.eval_at(1.0, 2.0)); // alpha = n/2 is fine
    double alpha = 1.0, p = 2, n = 2;
    double expected = (1 - std::pow(p, -alpha)) / (1 - std::pow(p, alpha - n));
    CHECK(std::abs(d.eval_at(alpha, p) - expected) < 1e-14);
}

TEST_CASE("geometric closed forms against numeric partial sums") {
    CHECK(geometric_tail(1, s) == s / (SymbolicScalar::one() - s));
    CHECK(geometric_tail(0, SymbolicScalar::zero()) == SymbolicScalar::one());
    CHECK_THROWS_AS(geometric_tail(0, SymbolicScalar::one()), DivergenceError);

    // r = p^-n / s, k0 = 0, convergent for alpha < n
    long p = 2;
    int n = 2;
    SymbolicScalar r = SymbolicScalar::monomial(rat_pow(p, -n), -1);
    SymbolicScalar closed = geometric_tail(0, r);
    double alpha = static_cast<double>(n) / 2;
    double rv = std::pow(static_cast<double>(p), alpha - n);
    double partial = 0, term = 1;
    for (int k = 0; k < 200; ++k) {
        partial += term;
        term *= rv;
    }
    CHECK(std::abs(closed.eval_at(alpha, static_cast<double>(p)) - partial) < 1e-12);

    // downward sums: sum_{k <= 2} (1/s)^k at alpha = 1, p = 2
    SymbolicScalar inv_s = SymbolicScalar::monomial(BigRat(1), -1);
    SymbolicScalar down = geometric_down(2, inv_s);
    double sv = 0.5;
    double expect = 0;
    for (int k = 2; k > -60; --k) expect += std::pow(1 / sv, k);
    CHECK(std::abs(down.eval_at(1.0, 2.0) - expect) < 1e-12);
}

TEST_CASE("alpha regions from ratio bounds") {
    // |s| < 1 always holds for alpha > 0
    AlphaRegion r1 = AlphaRegion::ratio_bound({BigRat(1), 1}, 2.0);
    CHECK(r1.contains(0.25));
    CHECK(r1.contains(10));
    // |p^-n / s| < 1 iff alpha < n
    AlphaRegion r2 = AlphaRegion::ratio_bound({rat_pow(2, -2), -1}, 2.0);
    CHECK(r2.contains(1.5));
    CHECK_FALSE(r2.contains(2.5));
    // |2 s^0| < 1 never holds
    CHECK(AlphaRegion::ratio_bound({BigRat(2), 0}, 2.0).empty());
}
