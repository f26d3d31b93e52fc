#include "nakelvin/spectral.hpp"

#include "nakelvin/shellgeom.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace nak {

Cx Character::operator()(const PAdic& x) const {
    BigRat frac = x.frac_part();
    if (frac == 0) return {1.0, 0.0}; // rank zero: exactly 1 on the integers
    double t = 2.0 * std::numbers::pi * to_double(frac);
    return {std::cos(t), std::sin(t)};
}

Cx Character::pair(const std::vector<PAdic>& x, const std::vector<PAdic>& xi, int sign) const {
    if (x.size() != xi.size()) throw DomainError("pairing dimension mismatch");
    PAdic dot = PAdic::zero(p);
    for (size_t i = 0; i < x.size(); ++i) dot = dot + x[i] * xi[i];
    Cx v = (*this)(dot);
    return sign >= 0 ? v : std::conj(v);
}

namespace {

TestFunction<Cx> fourier_core(const TestFunction<Cx>& f, int sign) {
    const long p = f.p();
    const int n = f.n();
    Character chi{p};
    TestFunction<Cx> out(p, n);
    for (const auto& term : f.terms()) {
        long r = term.ball.radius_exp();
        BigRat factor = rat_pow(p, -r * n);
        // support of the transform of this term
        Ball support(p, origin(p, n), -r);
        auto w = term.ball.center_norm_exp();
        long sub_r = std::max(w ? *w : -r, -r);
        for (const Ball& sub : support.refine(sub_r)) {
            Cx c = term.coeff * to_double(factor) * chi.pair(term.ball.center(), sub.center(), sign);
            out.add_term(sub, c);
        }
    }
    return out.canonicalize();
}

// int_{B(b, p^-rho)} chi(sign * x xi) dxi = chi(sign x b) p^(-rho n) [||x|| <= p^rho]
Cx ball_character_integral(const Character& chi, const Ball& b, const std::vector<PAdic>& x,
                           int sign) {
    auto h = vec_norm_exp(x);
    if (h && *h > b.radius_exp()) return {0.0, 0.0};
    return chi.pair(x, b.center(), sign) * to_double(b.measure());
}

} // namespace

TestFunction<Cx> fourier_transform(const TestFunction<Cx>& f) { return fourier_core(f, 1); }

TestFunction<Cx> inverse_fourier(const TestFunction<Cx>& g) { return fourier_core(g, -1); }

Cx fourier_oracle_at(const TestFunction<Cx>& f, const std::vector<PAdic>& xi, int sign) {
    const long p = f.p();
    const int n = f.n();
    Character chi{p};
    TestFunction<Cx> canon = f.canonical() ? f : f.canonicalize();
    if (canon.empty()) return {0.0, 0.0};
    auto w = vec_norm_exp(xi);
    long fine = std::max(canon.finest_radius_exp(), w ? *w : 0L);
    Cx acc = 0;
    for (const auto& term : canon.terms()) {
        for (const Ball& sub : term.ball.refine(fine)) {
            acc += term.coeff * chi.pair(sub.center(), xi, sign) * to_double(sub.measure());
        }
    }
    return acc;
}

Cx vt_spectral_at(const TestFunction<Cx>& phi, const std::vector<PAdic>& x, double alpha) {
    if (alpha <= 0) throw DomainError("alpha must be positive");
    const long p = phi.p();
    const int n = phi.n();
    const double pd = static_cast<double>(p);
    Character chi{p};
    TestFunction<Cx> hat = fourier_transform(phi);
    auto h = vec_norm_exp(x);
    const double s = std::pow(pd, -alpha);
    const double A = std::pow(pd, -static_cast<double>(n));
    Cx acc = 0;
    for (const auto& term : hat.terms()) {
        if (term.ball.contains_origin()) {
            long rho = term.ball.radius_exp();
            double v;
            if (!h || *h <= rho) {
                // sum_{k >= rho} p^(-k alpha) mu(S(0,-k))
                v = (1.0 - A) * std::pow(s * A, static_cast<double>(rho)) / (1.0 - s * A);
            } else {
                // the character kills everything except the two boundary scales
                v = A * std::pow(s * A, static_cast<double>(*h - 1)) * (s - 1.0) / (1.0 - s * A);
            }
            acc += term.coeff * v;
        } else {
            long w = *term.ball.center_norm_exp();
            double mult = std::pow(pd, alpha * static_cast<double>(w)); // ||xi||^alpha on the ball
            acc += term.coeff * mult * ball_character_integral(chi, term.ball, x, -1);
        }
    }
    return acc;
}

namespace {

double weight_integral(const Ball& b, int ell) {
    const long p = b.p();
    const int n = b.n();
    if (!b.contains_origin()) {
        long w = *b.center_norm_exp();
        double wt = w > 0 ? std::pow(static_cast<double>(p), static_cast<double>(ell * w)) : 1.0;
        return wt * to_double(b.measure());
    }
    long rho = b.radius_exp();
    if (rho >= 0) return to_double(b.measure());
    double acc = 1.0; // the unit ball, weight 1
    for (long k = 1; k <= -rho; ++k) {
        acc += std::pow(static_cast<double>(p), static_cast<double>(ell * k)) *
               to_double(sphere_measure(p, n, k));
    }
    return acc;
}

} // namespace

Cx sobolev_inner(const TestFunction<Cx>& phi, const TestFunction<Cx>& psi, int ell) {
    if (ell < 0) throw DomainError("the Sobolev index must be nonnegative");
    TestFunction<Cx> ph = fourier_transform(phi);
    TestFunction<Cx> ps = fourier_transform(psi);
    if (ph.empty() || ps.empty()) return {0.0, 0.0};
    long fine = std::max(ph.finest_radius_exp(), ps.finest_radius_exp());
    auto collect = [fine](const TestFunction<Cx>& f) {
        std::map<Ball, Cx> m;
        for (const auto& term : f.terms()) {
            for (const Ball& sub : term.ball.refine(fine)) {
                auto [it, fresh] = m.emplace(sub, term.coeff);
                if (!fresh) it->second += term.coeff;
            }
        }
        return m;
    };
    std::map<Ball, Cx> mph = collect(ph);
    std::map<Ball, Cx> mps = collect(ps);
    Cx acc = 0;
    for (const auto& [ball, c] : mph) {
        auto it = mps.find(ball);
        if (it == mps.end()) continue;
        acc += c * std::conj(it->second) * weight_integral(ball, ell);
    }
    return acc;
}

double l2_norm_sq(const TestFunction<Cx>& f) {
    TestFunction<Cx> canon = f.canonical() ? f : f.canonicalize();
    double acc = 0;
    for (const auto& term : canon.terms()) {
        acc += std::norm(term.coeff) * to_double(term.ball.measure());
    }
    return acc;
}

std::pair<TestFunction<Cx>, SymbolicScalar> make_eigenfunction(long p, int n,
                                                               const std::vector<PAdic>& u0) {
    auto w = vec_norm_exp(u0);
    if (!w || *w != 1) throw DomainError("the eigenfunction construction needs ||u0|| = p");
    Character chi{p};
    TestFunction<Cx> f(p, n);
    for (const Ball& sub : Ball::unit(p, n).refine(1)) {
        f.add_term(sub, chi.pair(u0, sub.center(), 1));
    }
    return {f.canonicalize(), SymbolicScalar::monomial(BigRat(1), -1)};
}

} // namespace nak
