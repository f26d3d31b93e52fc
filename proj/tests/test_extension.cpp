#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakelvin/extension.hpp"

#include <random>

using namespace nak;

namespace {

std::mt19937_64 rng(77001);
long rnd(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

ExtElement random_element(const ExtCtxPtr& ctx) {
    std::vector<PAdic> coords;
    for (int i = 0; i < ctx->n(); ++i) {
        long num = rnd(1, 200) * (rnd(0, 1) ? 1 : -1);
        PAdic c = PAdic::from_rational(BigInt(num), BigInt(rnd(1, 200)), ctx->p(), kDefaultPrecision);
        coords.push_back(c.shift(rnd(-4, 4) - c.valuation()));
    }
    // make sure it is nonzero (it always is here: digits nonzero)
    return ExtElement(ctx, std::move(coords));
}

} // namespace

TEST_CASE("find_irreducible picks the first candidate") {
    CHECK(find_irreducible(2, 2) == FpPoly{1, 1, 1});    // t^2+t+1
    CHECK(find_irreducible(3, 2) == FpPoly{1, 0, 1});    // t^2+1
    CHECK(find_irreducible(2, 3) == FpPoly{1, 1, 0, 1}); // t^3+t+1
    CHECK(fp_is_irreducible(find_irreducible(5, 4), 5));
    CHECK(fp_is_irreducible(find_irreducible(3, 6), 3));
}

TEST_CASE("polynomial rendering") {
    CHECK(fp_poly_to_string(FpPoly{1, 1, 1}) == "t^2+t+1");
    CHECK(fp_poly_parse("t^2+t+1") == FpPoly{1, 1, 1});
    CHECK(fp_poly_parse(fp_poly_to_string(FpPoly{2, 0, 1, 1})) == FpPoly{2, 0, 1, 1});
}

TEST_CASE("residue field inversion") {
    ResidueElement one(2, {1, 1, 1}, {1});
    CHECK(one.invert() == one);

    ResidueElement t2(2, {1, 1, 1}, {0, 1});
    CHECK(t2.invert() == ResidueElement(2, {1, 1, 1}, {1, 1})); // 1/t = t+1

    ResidueElement t3(3, {1, 0, 1}, {0, 1});
    CHECK(t3.invert() == ResidueElement(3, {1, 0, 1}, {0, 2})); // 1/t = 2t

    CHECK_THROWS_AS(ResidueElement(3, {1, 0, 1}, {0}).invert(), DivisionByZeroError);
    for (int i = 0; i < 50; ++i) {
        FpPoly mod = find_irreducible(3, 3);
        FpPoly c{rnd(0, 2), rnd(0, 2), rnd(0, 2)};
        if (fp_is_zero(c)) continue;
        ResidueElement a(3, mod, c);
        CHECK(a.mul(a.invert()) == ResidueElement(3, mod, {1}));
    }
}

TEST_CASE("extension context") {
    auto ctx = ExtensionContext::get(2, 2);
    CHECK(ctx->describe() == "p=2;n=2;modulus=t^2+t+1");
    CHECK(ExtensionContext::get(2, 2).get() == ctx.get()); // cached
    CHECK_THROWS_AS(ExtensionContext::get(2, 1), DomainError);
    CHECK_THROWS_AS(ExtensionContext::get(2, 9), DomainError);
}

TEST_CASE("ext_mul identity and t*t") {
    auto ctx = ExtensionContext::get(2, 2);
    ExtElement one = ExtElement::one(ctx);
    ExtElement t(ctx, {PAdic::zero(2), PAdic::from_int(1, 2)});
    CHECK((one * t).coords()[1].eq_window(PAdic::from_int(1, 2)));

    // t^2 = -1 - t mod t^2+t+1
    ExtElement tt = t * t;
    CHECK(tt.coords()[0].eq_window(PAdic::from_int(-1, 2)));
    CHECK(tt.coords()[1].eq_window(PAdic::from_int(-1, 2)));

    auto ctx3 = ExtensionContext::get(3, 2);
    CHECK_THROWS_AS((void)(one * ExtElement::one(ctx3)), DomainError);
}

TEST_CASE("norms of Eq. (28)") {
    auto ctx = ExtensionContext::get(3, 2);
    ExtElement x(ctx, {PAdic::from_int(3, 3), PAdic::from_int(9, 3)});
    CHECK(*x.max_norm_exp() == -1); // ||x|| = 1/3
    CHECK(*x.abs_exp() == -2);      // |x|_L = 1/9
    CHECK_FALSE(ExtElement::zero(ctx).max_norm_exp().has_value());

    ExtElement y(ctx, {PAdic::from_int(1, 3), PAdic::from_int(243, 3)});
    CHECK(*y.max_norm_exp() == 0);
}

TEST_CASE("inversion in L") {
    auto ctx = ExtensionContext::get(2, 2);
    ExtElement one = ExtElement::one(ctx);
    CHECK(one.invert().coords()[0].eq_window(PAdic::from_int(1, 2)));

    ExtElement t(ctx, {PAdic::zero(2), PAdic::from_int(1, 2)});
    ExtElement ti = t.invert();
    CHECK(ti.coords()[0].eq_window(PAdic::from_int(-1, 2)));
    CHECK(ti.coords()[1].eq_window(PAdic::from_int(-1, 2)));

    CHECK_THROWS_AS(ExtElement::zero(ctx).invert(), DivisionByZeroError);
}

TEST_CASE("multiplicativity of |.|_L on random pairs") {
    for (auto [p, n] : {std::pair<long, int>{2, 2}, {3, 2}, {2, 3}, {5, 3}}) {
        auto ctx = ExtensionContext::get(p, n);
        for (int i = 0; i < 50; ++i) {
            ExtElement a = random_element(ctx);
            ExtElement b = random_element(ctx);
            CHECK(*(a * b).abs_exp() == *a.abs_exp() + *b.abs_exp());
            // Eq. (28): |x|_L = ||x||^n
            CHECK(*a.abs_exp() == *a.max_norm_exp() * n);
        }
    }
}

TEST_CASE("inversion round trip up to precision - 2") {
    for (auto [p, n] : {std::pair<long, int>{2, 2}, {3, 2}, {5, 2}, {2, 3}}) {
        auto ctx = ExtensionContext::get(p, n);
        for (int i = 0; i < 40; ++i) {
            ExtElement a = random_element(ctx);
            ExtElement prod = a * a.invert();
            CHECK(*prod.max_norm_exp() == 0);
            // the common window shrinks by the coordinate valuation spread
            long end = kDefaultPrecision;
            for (const PAdic& c : prod.coords()) {
                if (!c.is_exact()) end = std::min(end, c.known_end());
            }
            REQUIRE(end >= kDefaultPrecision - 10);
            CHECK(prod.coords()[0].digit_at(0) == 1);
            for (long j = 1; j < end - 2; ++j) CHECK(prod.coords()[0].digit_at(j) == 0);
            for (int k = 1; k < n; ++k) {
                const PAdic& c = prod.coords()[static_cast<size_t>(k)];
                CHECK((c.is_zero() || c.valuation() >= end - 2));
            }
            // ||1/a|| = ||a||^-1
            CHECK(*a.invert().max_norm_exp() == -*a.max_norm_exp());
        }
    }
}

TEST_CASE("iso_U is an isometric linear bijection") {
    auto ctx = ExtensionContext::get(3, 2);
    std::vector<PAdic> e1{PAdic::from_int(1, 3), PAdic::zero(3)};
    CHECK(iso_U(ctx, e1).coords()[0].eq_window(PAdic::from_int(1, 3)));
    CHECK_THROWS_AS(iso_U(ctx, {PAdic::zero(3)}), DomainError);

    for (int i = 0; i < 50; ++i) {
        ExtElement a = random_element(ctx);
        CHECK(*vec_norm_exp(a.coords()) == *iso_U(ctx, a.coords()).max_norm_exp());
        // U(v) + U(w) = U(v + w), coordinatewise by construction
        ExtElement b = random_element(ctx);
        ExtElement sum = a + b;
        auto direct = vec_add(a.coords(), b.coords());
        for (int j = 0; j < 2; ++j) CHECK(sum.coords()[static_cast<size_t>(j)].eq_window(direct[static_cast<size_t>(j)]));
    }
}

TEST_CASE("p remains a uniformizer of L") {
    auto ctx = ExtensionContext::get(3, 2);
    for (int i = 0; i < 30; ++i) {
        ExtElement a = random_element(ctx);
        std::vector<PAdic> shifted;
        for (const PAdic& c : a.coords()) shifted.push_back(c.shift(1));
        ExtElement pa(ctx, std::move(shifted));
        CHECK(*pa.max_norm_exp() == *a.max_norm_exp() - 1);
    }
}
