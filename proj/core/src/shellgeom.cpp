#include "nakelvin/shellgeom.hpp"

namespace nak {

BigRat sphere_measure(long p, int n, long e) {
    return rat_pow(p, e * n) - rat_pow(p, (e - 1) * n);
}

BigRat closed_ball_measure(long p, int n, long e) { return rat_pow(p, e * n); }

BigRat ball_ball_measure(const Ball& b, const std::vector<PAdic>& x, long e) {
    long eb = -b.radius_exp();
    auto d = vec_dist_exp(b.center(), x);
    if (d && *d > std::max(eb, e)) return BigRat(0);
    return closed_ball_measure(b.p(), b.n(), std::min(eb, e));
}

BigRat ball_shell_measure(const Ball& b, const std::vector<PAdic>& x, long e) {
    return ball_ball_measure(b, x, e) - ball_ball_measure(b, x, e - 1);
}

} // namespace nak
