#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakelvin/sampling.hpp"
#include "nakelvin/vt.hpp"

#include <cmath>

// The brute-force shell-sum oracle is validated first, against values
// computed directly here; the symbolic engine is only trusted against it.

using namespace nak;

namespace {

using Cx = std::complex<double>;

PiecewiseRadial<Cx> unit_ball_prf(long p, int n) {
    PiecewiseRadial<Cx> f(p, n);
    f.compact.add_term(Ball::unit(p, n), Cx{1.0, 0.0});
    return f;
}

double vt_constant(double alpha, double p, double n) {
    return (std::pow(p, alpha) - 1.0) / (1.0 - std::pow(p, -(alpha + n)));
}

} // namespace

TEST_CASE("kernel tail partial sums match the closed form") {
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            for (double alpha : {0.5, 1.0, 1.5}) {
                // int_{||z|| >= p} ||z||^-(n+alpha) dz summed shell by shell
                double sum = 0;
                for (int k = 1; k < 4000; ++k) {
                    double shell = std::pow(p, k * n) - std::pow(p, (k - 1) * n);
                    double term = shell * std::pow(p, -k * (n + alpha));
                    sum += term;
                    if (term < 1e-18 * std::abs(sum)) break;
                }
                double closed = (1.0 - std::pow(p, -n)) * std::pow(p, -alpha) /
                                (1.0 - std::pow(p, -alpha));
                CHECK(std::abs(sum - closed) < 1e-12);
            }
        }
    }
}

TEST_CASE("oracle on the unit ball at an interior point") {
    auto f = unit_ball_prf(2, 2);
    // D^{1,2} 1_{Z_2^2} inside = 6/7 = eval of 3/(4-s) at s = 1/2
    Cx v = shell_sum_oracle_vt(f, origin(2, 2), 1.0, 1e-13);
    CHECK(std::abs(v - Cx{6.0 / 7.0, 0.0}) < 1e-12);

    // general interior value c(alpha) (1-p^-n) p^-alpha / (1-p^-alpha)
    for (long p : {2L, 3L, 5L}) {
        for (int n : {2, 3}) {
            auto g = unit_ball_prf(p, n);
            for (double alpha : {0.5, 1.0, 1.5}) {
                double expect = vt_constant(alpha, p, n) * (1.0 - std::pow(p, -n)) *
                                std::pow(p, -alpha) / (1.0 - std::pow(p, -alpha));
                Cx w = shell_sum_oracle_vt(g, origin(p, n), alpha, 1e-13);
                CHECK(std::abs(w - Cx{expect, 0.0}) < 1e-12);
            }
        }
    }
}

TEST_CASE("oracle on a single constant shell") {
    // u = 1_B with ||x - center|| = p^d outside B: the integral collapses to
    // -c * mu(B) * p^(-d(n+alpha))
    Sampler smp(404);
    for (long p : {2L, 3L}) {
        int n = 2;
        for (long r : {1L, 2L}) {
            PiecewiseRadial<Cx> f(p, n);
            f.compact.add_term(Ball(p, origin(p, n), r), Cx{1.0, 0.0});
            for (long d : {1L, 2L}) {
                auto x = smp.point_with_norm(p, n, d);
                for (double alpha : {0.5, 1.0, 1.5}) {
                    double expect = -vt_constant(alpha, p, n) * std::pow(p, -double(r * n)) *
                                    std::pow(p, -double(d) * (n + alpha));
                    Cx w = shell_sum_oracle_vt(f, x, alpha, 1e-13);
                    CHECK(std::abs(w - Cx{expect, 0.0}) < 1e-12);
                }
            }
        }
    }
    // frozen spot value: p=2, n=2, r=1, d=1, alpha=1 -> -(8/7)(1/4)(1/8)
    PiecewiseRadial<Cx> f(2, 2);
    f.compact.add_term(Ball(2, origin(2, 2), 1), Cx{1.0, 0.0});
    auto x = smp.point_with_norm(2, 2, 1);
    CHECK(std::abs(shell_sum_oracle_vt(f, x, 1.0, 1e-13) - Cx{-1.0 / 28.0, 0.0}) < 1e-13);
}

TEST_CASE("oracle of the zero integrand") {
    PiecewiseRadial<Cx> f(3, 2);
    Sampler smp(1);
    CHECK(std::abs(shell_sum_oracle_vt(f, smp.point_with_norm(3, 2, 1), 0.75, 1e-13)) == 0.0);
}

TEST_CASE("oracle reports divergence instead of summing garbage") {
    PiecewiseRadial<Cx> f(2, 2);
    RadialTail<Cx> tail;
    tail.center = origin(2, 2);
    tail.start_shell = 0;
    tail.base = Cx{1.0, 0.0};
    tail.ratio = MonomialRatio{BigRat(1), -1}; // grows like p^(k alpha)
    f.tails.push_back(tail);
    Sampler smp(2);
    CHECK_THROWS_AS(shell_sum_oracle_vt(f, smp.point_with_norm(2, 2, 0), 1.0, 1e-12),
                    DivergenceError);
}

TEST_CASE("Riesz oracle on the unit ball") {
    // D^-gamma 1_{O_L} at an interior point: d * (1 - p^-n)/(1 - s)
    for (long p : {2L, 3L}) {
        int n = 2;
        auto f = unit_ball_prf(p, n);
        for (double alpha : {0.5, 1.0, 1.5}) {
            double d = (1.0 - std::pow(p, -alpha)) / (1.0 - std::pow(p, alpha - n));
            double expect = d * (1.0 - std::pow(p, -n)) / (1.0 - std::pow(p, -alpha));
            Cx w = shell_sum_oracle_riesz(f, origin(p, n), alpha, 1e-13);
            CHECK(std::abs(w - Cx{expect, 0.0}) < 1e-12);
        }
    }
    // frozen: p=2, n=2, alpha=1: d=1, value (3/4)/(1/2) = 3/2
    CHECK(std::abs(shell_sum_oracle_riesz(unit_ball_prf(2, 2), origin(2, 2), 1.0, 1e-13) -
                   Cx{1.5, 0.0}) < 1e-13);
    CHECK_THROWS_AS(shell_sum_oracle_riesz(unit_ball_prf(2, 2), origin(2, 2), 2.5, 1e-12),
                    DivergenceError);
}
