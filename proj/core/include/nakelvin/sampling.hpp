#pragma once

#include "nakelvin/schwartz.hpp"

#include <random>

namespace nak {

// Deterministic input generator for verification suites and property tests.
// Raw engine draws with modulo reduction, so a (seed, call sequence) pair
// reproduces the same inputs on every platform.
class Sampler {
public:
    explicit Sampler(unsigned long long seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<unsigned long long>(hi - lo + 1));
    }

    double real(double lo, double hi) {
        double t = static_cast<double>(eng_() >> 11) / 9007199254740992.0; // 2^53
        return lo + t * (hi - lo);
    }

    // a p-adic unit with random digits
    PAdic unit(long p, int precision = kDefaultPrecision) {
        std::vector<int32_t> digits(static_cast<size_t>(precision));
        digits[0] = static_cast<int32_t>(uniform(1, p - 1));
        for (int i = 1; i < precision; ++i) digits[static_cast<size_t>(i)] = static_cast<int32_t>(uniform(0, p - 1));
        return PAdic(p, 0, std::move(digits), false);
    }

    PAdic with_valuation(long p, long v, int precision = kDefaultPrecision) {
        return unit(p, precision).shift(v);
    }

    // point with ||x|| = p^e exactly
    std::vector<PAdic> point_with_norm(long p, int n, long e, int precision = kDefaultPrecision) {
        std::vector<PAdic> out;
        out.reserve(static_cast<size_t>(n));
        long lead = uniform(0, n - 1);
        for (int j = 0; j < n; ++j) {
            if (j == lead) {
                out.push_back(with_valuation(p, -e, precision));
            } else if (uniform(0, 4) == 0) {
                out.push_back(PAdic::zero(p));
            } else {
                out.push_back(with_valuation(p, -e + uniform(0, 5), precision));
            }
        }
        return out;
    }

    // ball with prescribed center norm and radius exponent
    Ball ball(long p, int n, long center_norm_exp, long radius_exp) {
        return Ball(p, point_with_norm(p, n, center_norm_exp), radius_exp);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace nak
