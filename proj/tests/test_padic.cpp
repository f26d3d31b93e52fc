#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakelvin/padic.hpp"

#include <random>

using namespace nak;

namespace {

std::mt19937_64 rng(20240901);

long rnd(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

PAdic random_padic(long p, int precision = kDefaultPrecision) {
    long num = rnd(1, 4000);
    long den = rnd(1, 4000);
    long sign = rnd(0, 1) ? 1 : -1;
    PAdic x = PAdic::from_rational(BigInt(sign * num), BigInt(den), p, precision);
    return x.shift(rnd(-5, 5) - x.valuation()); // valuation in [-5, 5]
}

} // namespace

TEST_CASE("from_rational basics") {
    PAdic one = PAdic::from_rational(BigInt(1), BigInt(1), 3, 4);
    CHECK(one.valuation() == 0);
    CHECK(one.digit_at(0) == 1);
    CHECK(one.digit_at(1) == 0);
    CHECK(one.digit_at(3) == 0);

    PAdic nine = PAdic::from_rational(BigInt(9), BigInt(1), 3, 4);
    CHECK(nine.valuation() == 2);
    CHECK(nine.digit_at(2) == 1);
    CHECK(*nine.norm_exp() == -2); // |9|_3 = 3^-2

    PAdic minus_one = PAdic::from_rational(BigInt(-1), BigInt(1), 2, 5);
    CHECK(minus_one.valuation() == 0);
    for (long i = 0; i < 5; ++i) CHECK(minus_one.digit_at(i) == 1);
    // -1 = sum 2^i: adding 1 must cancel through the whole window
    PAdic sum = minus_one + PAdic::from_int(1, 2, 5);
    CHECK(sum.is_zero());
    CHECK_FALSE(sum.is_exact_zero());
}

TEST_CASE("from_rational validates inputs") {
    CHECK_THROWS_AS(PAdic::from_rational(BigInt(1), BigInt(0), 3, 4), DomainError);
    CHECK_THROWS_AS(PAdic::from_rational(BigInt(1), BigInt(1), 4, 4), DomainError);
    CHECK_THROWS_AS(PAdic::from_rational(BigInt(1), BigInt(1), 1, 4), DomainError);
}

TEST_CASE("addition") {
    PAdic one = PAdic::from_int(1, 2);
    CHECK((one + (-one)).is_zero());

    // |a| = 1/3, |b| = 1/9 -> |a+b| = 1/3
    PAdic a = PAdic::from_int(3, 3);
    PAdic b = PAdic::from_int(9, 3);
    CHECK(*(a + b).norm_exp() == -1);

    PAdic two = one + one;
    CHECK(two.valuation() == 1);
    CHECK(two.digit_at(1) == 1);

    CHECK_THROWS_AS((void)(PAdic::from_int(1, 2) + PAdic::from_int(1, 3)), DomainError);
}

TEST_CASE("multiplication") {
    PAdic x = PAdic::from_int(3, 3) * PAdic::from_int(9, 3);
    CHECK(x.valuation() == 3);
    CHECK(x.eq_window(PAdic::from_int(27, 3)));

    // |a| = 1/3, |b| = 9 -> |ab| = 3
    PAdic a = PAdic::from_int(3, 3);
    PAdic b = PAdic::from_rational(BigInt(1), BigInt(9), 3, 8);
    CHECK(*(a * b).norm_exp() == 1);

    PAdic m1 = PAdic::from_rational(BigInt(-1), BigInt(1), 2, 5);
    CHECK((m1 * m1).eq_window(PAdic::from_int(1, 2, 5)));
}

TEST_CASE("inversion") {
    PAdic one = PAdic::from_int(1, 5);
    CHECK(one.invert().eq_window(one));

    PAdic three = PAdic::from_int(3, 3);
    PAdic inv3 = three.invert();
    CHECK(inv3.valuation() == -1);
    CHECK(inv3.digit_at(-1) == 1);

    PAdic m1 = PAdic::from_rational(BigInt(-1), BigInt(1), 2, 8);
    PAdic im1 = m1.invert();
    for (long i = 0; i < 8; ++i) CHECK(im1.digit_at(i) == 1);
    CHECK((m1 * im1).eq_window(PAdic::from_int(1, 2)));

    CHECK_THROWS_AS(PAdic::zero(7).invert(), DivisionByZeroError);
}

TEST_CASE("ultrametric law on random samples") {
    for (long p : {2L, 3L, 5L}) {
        for (int i = 0; i < 200; ++i) {
            PAdic a = random_padic(p);
            PAdic b = random_padic(p);
            PAdic sum = a + b;
            long ea = -a.valuation(), eb = -b.valuation();
            if (!sum.is_zero()) {
                CHECK(-sum.valuation() <= std::max(ea, eb));
            }
            if (ea != eb) {
                REQUIRE_FALSE(sum.is_zero());
                CHECK(-sum.valuation() == std::max(ea, eb));
            }
        }
    }
}

TEST_CASE("multiplicativity of the valuation") {
    for (int i = 0; i < 200; ++i) {
        PAdic a = random_padic(3);
        PAdic b = random_padic(3);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
    }
}

TEST_CASE("inversion round trip at precision - 1") {
    for (long p : {2L, 5L}) {
        for (int i = 0; i < 100; ++i) {
            PAdic a = random_padic(p);
            PAdic prod = a * a.invert();
            PAdic one = PAdic::from_int(1, p);
            // all digits up to precision - 1
            CHECK(prod.digit_at(0) == 1);
            for (int j = 1; j < prod.precision() - 1; ++j) CHECK(prod.digit_at(j) == 0);
            CHECK(prod.eq_window(one));
        }
    }
}

TEST_CASE("from_rational is additive and multiplicative on samples") {
    for (int i = 0; i < 50; ++i) {
        long n1 = rnd(-50, 50), n2 = rnd(-50, 50);
        long d1 = rnd(1, 50), d2 = rnd(1, 50);
        BigRat x(n1, d1), y(n2, d2);
        BigRat sum = x + y, prod = x * y;
        auto enc = [](const BigRat& r) {
            return PAdic::from_rational(boost::multiprecision::numerator(r),
                                        boost::multiprecision::denominator(r), 5, 20);
        };
        CHECK((enc(x) + enc(y)).eq_window(enc(sum)));
        CHECK((enc(x) * enc(y)).eq_window(enc(prod)));
    }
}

TEST_CASE("render and parse round trip") {
    for (int i = 0; i < 40; ++i) {
        PAdic a = random_padic(3, 10);
        PAdic back = PAdic::parse(a.render(), 3);
        CHECK(back.eq_window(a));
        CHECK(back.valuation() == a.valuation());
    }
    CHECK(PAdic::parse("0 (exact)", 2).is_exact_zero());
    CHECK(PAdic::parse("1 1 0 1 * 2^-3 (mod 2^1)", 2).valuation() == -3);
    CHECK_THROWS_AS(PAdic::parse("nonsense", 2), ParseError);
}

TEST_CASE("reduce_mod produces canonical finite representatives") {
    PAdic m1 = PAdic::from_rational(BigInt(-1), BigInt(1), 2, 8);
    PAdic red = m1.reduce_mod(3);
    CHECK(red.is_exact());
    CHECK(red.to_rational() == BigRat(7)); // -1 mod 8 = 7
    CHECK(PAdic::from_int(8, 2).reduce_mod(3).is_exact_zero());

    // an approximate zero cannot be reduced beyond its window
    PAdic z = PAdic::zero_to(2, 2);
    CHECK_THROWS_AS(z.reduce_mod(5), PrecisionError);
    CHECK(z.reduce_mod(2).is_exact_zero());
}

TEST_CASE("divisibility predicate is precision-aware") {
    PAdic z = PAdic::zero_to(3, 4);
    CHECK(z.divisible_by_pow(3));
    CHECK_THROWS_AS(z.divisible_by_pow(5), PrecisionError);
    CHECK(PAdic::from_int(9, 3).divisible_by_pow(2));
    CHECK_FALSE(PAdic::from_int(9, 3).divisible_by_pow(3));
}

TEST_CASE("fractional part") {
    PAdic x = PAdic::from_rational(BigInt(1), BigInt(4), 2, 8); // |x| = 4
    CHECK(x.frac_part() == BigRat(1, 4));
    CHECK(PAdic::from_int(7, 2).frac_part() == 0);
    PAdic y = PAdic::from_rational(BigInt(3), BigInt(2), 5, 8);
    // 3/2 is a 5-adic integer
    CHECK(y.frac_part() == 0);
}
