#pragma once

#include "nakelvin/schwartz.hpp"

namespace nak {

// Exact Haar-measure bookkeeping for max-norm balls and spheres in K^n.
// Everything here is integer arithmetic on valuations; no scalar backend.

// measure of the sphere S(x, e) = {y : ||y - x|| = p^e}
BigRat sphere_measure(long p, int n, long e);

// measure of the ball {y : ||y - x|| <= p^e}
BigRat closed_ball_measure(long p, int n, long e);

// measure of b intersected with the ball B(x, p^e); ultrametric balls are
// nested or disjoint, so this is 0 or the smaller measure
BigRat ball_ball_measure(const Ball& b, const std::vector<PAdic>& x, long e);

// measure of b intersected with the sphere S(x, e)
BigRat ball_shell_measure(const Ball& b, const std::vector<PAdic>& x, long e);

} // namespace nak
