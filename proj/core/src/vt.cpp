#include "nakelvin/vt.hpp"

#include <cmath>

namespace nak {

namespace {

using Cx = std::complex<double>;
using Cxl = std::complex<long double>;
using OracleProfile = ShellProfile<Cxl, OracleOps>;

struct FarMode {
    long double mag;   // |coefficient| including the (1 - p^-n) sphere factor
    long double ratio; // per-shell decay, must be < 1
};

long double remainder_bound(const std::vector<FarMode>& modes, long e) {
    long double rem = 0;
    for (const FarMode& m : modes) {
        rem += m.mag * std::pow(m.ratio, static_cast<long double>(e + 1)) / (1.0L - m.ratio);
    }
    return rem;
}

constexpr int kOracleShellCap = 200;

// the oracle runs in extended precision; inputs arrive as plain doubles
PiecewiseRadial<Cxl> widen(const PiecewiseRadial<Cx>& f) {
    PiecewiseRadial<Cxl> out(f.p(), f.n());
    for (const auto& term : f.compact.terms()) {
        out.compact.add_term(term.ball, Cxl{term.coeff.real(), term.coeff.imag()});
    }
    for (const auto& tail : f.tails) {
        RadialTail<Cxl> t;
        t.center = tail.center;
        t.start_shell = tail.start_shell;
        t.base = Cxl{tail.base.real(), tail.base.imag()};
        t.ratio = tail.ratio;
        out.tails.push_back(std::move(t));
    }
    return out;
}

std::vector<FarMode> far_modes(const OracleProfile& prof, const Cxl& ux, long double s,
                               long double gap, long double alpha, long double p) {
    std::vector<FarMode> modes;
    if (std::abs(ux) > 0) modes.push_back({std::abs(ux) * gap, s});
    prof.for_each_far_mode([&](const MonomialRatio& ratio, const Cxl& base) {
        long double q =
            std::abs(to_long_double(ratio.c) * std::pow(p, -alpha * static_cast<long double>(ratio.spow))) * s;
        if (q >= 1.0L) throw DivergenceError("shell terms do not decay at this alpha");
        modes.push_back({std::abs(base) * gap, q});
    });
    return modes;
}

} // namespace

SymbolicScalar vt_exact(const PiecewiseRadial<SymbolicScalar>& u, const std::vector<PAdic>& x,
                        int n, AlphaRegion* region) {
    return vt_apply_at(u, x, scalar_c(n, u.p()), ExactOps{}, region);
}

SymbolicScalar riesz_exact(const PiecewiseRadial<SymbolicScalar>& f, const std::vector<PAdic>& x,
                           int n, AlphaRegion* region) {
    if (region) *region = region->intersect(AlphaRegion{0.0, static_cast<double>(n)});
    return riesz_apply_at(f, x, scalar_d(n, f.p()), ExactOps{}, region);
}

SymbolicScalar dl_exact(const PiecewiseRadial<SymbolicScalar>& u, const std::vector<PAdic>& x,
                        int n, AlphaRegion* region) {
    return dl_gamma_apply_at(u, x, scalar_dl(n, u.p()), ExactOps{}, region);
}

std::complex<double> vt_numeric(const PiecewiseRadial<std::complex<double>>& u,
                                const std::vector<PAdic>& x, double alpha) {
    if (alpha <= 0) throw DomainError("alpha must be positive");
    double p = static_cast<double>(u.p());
    double n = static_cast<double>(u.n());
    NumericOps ops{alpha, p};
    Cx constant{(std::pow(p, alpha) - 1.0) / (1.0 - std::pow(p, -(alpha + n))), 0.0};
    return vt_apply_at(u, x, constant, ops);
}

std::complex<double> riesz_numeric(const PiecewiseRadial<std::complex<double>>& f,
                                   const std::vector<PAdic>& x, double alpha) {
    double n = static_cast<double>(f.n());
    if (alpha <= 0 || alpha >= n) {
        throw DivergenceError("alpha must lie in (0, n): the gamma != 1 exclusion");
    }
    double p = static_cast<double>(f.p());
    NumericOps ops{alpha, p};
    Cx constant{(1.0 - std::pow(p, -alpha)) / (1.0 - std::pow(p, alpha - n)), 0.0};
    return riesz_apply_at(f, x, constant, ops);
}

std::complex<double> shell_sum_oracle_vt(const PiecewiseRadial<Cx>& u, const std::vector<PAdic>& x,
                                         double alpha, double target_error) {
    if (alpha <= 0) throw DomainError("alpha must be positive");
    const long double p = static_cast<long double>(u.p());
    const int n = u.n();
    const long double al = alpha;
    OracleOps ops{al, p};
    PiecewiseRadial<Cxl> uw = widen(u);
    OracleProfile prof(uw, x, ops);
    Cxl ux = prof.value();
    const long double s = std::pow(p, -al);
    const long double A = std::pow(p, -static_cast<long double>(n));
    const long double gap = 1.0L - A;
    std::vector<FarMode> modes = far_modes(prof, ux, s, gap, al, p);

    Cxl acc = 0;
    long shells = 0;
    for (long e = prof.e0() + 1;; ++e, ++shells) {
        // the same exactly-rounded measure the shell integral uses, so the
        // difference vanishes bitwise on shells where u is constant
        Cxl muS{to_long_double(sphere_measure(u.p(), n, e)), 0.0L};
        Cxl term = (ux * muS - prof.integral(e)) * std::pow(A * s, static_cast<long double>(e));
        acc += term;
        if (e > prof.ebig() && remainder_bound(modes, e) < static_cast<long double>(target_error)) break;
        if (shells > prof.ebig() - prof.e0() + kOracleShellCap) {
            throw DivergenceError("no decay detected within the shell cap");
        }
    }
    long double constant = (std::pow(p, al) - 1.0L) / (1.0L - std::pow(p, -(al + n)));
    Cxl out = constant * acc;
    return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

std::complex<double> shell_sum_oracle_riesz(const PiecewiseRadial<Cx>& f,
                                            const std::vector<PAdic>& x, double alpha,
                                            double target_error) {
    const int n = f.n();
    if (alpha <= 0 || alpha >= static_cast<double>(n)) {
        throw DivergenceError("alpha must lie in (0, n): the gamma != 1 exclusion");
    }
    const long double p = static_cast<long double>(f.p());
    const long double al = alpha;
    OracleOps ops{al, p};
    PiecewiseRadial<Cxl> fw = widen(f);
    OracleProfile prof(fw, x, ops);
    Cxl fx = prof.value();
    const long double s = std::pow(p, -al);
    const long double A = std::pow(p, -static_cast<long double>(n));
    const long double gap = 1.0L - A;
    const long double target = target_error;

    Cxl acc = 0;
    // singular end: f constant around x, per-shell terms shrink by s downward
    if (std::abs(fx) > 0) {
        long shells = 0;
        for (long e = prof.e0();; --e, ++shells) {
            Cxl term = fx * Cxl{gap * std::pow(1.0L / s, static_cast<long double>(e)), 0.0L};
            acc += term;
            if (std::abs(term) * s / (1.0L - s) < target / 2) break;
            if (shells > kOracleShellCap) {
                throw DivergenceError("no decay detected within the shell cap");
            }
        }
    }
    std::vector<FarMode> modes;
    prof.for_each_far_mode([&](const MonomialRatio& ratio, const Cxl& base) {
        long double q =
            std::abs(to_long_double(ratio.c) * std::pow(p, -al * static_cast<long double>(ratio.spow))) / s;
        if (q >= 1.0L) throw DivergenceError("shell terms do not decay at this alpha");
        modes.push_back({std::abs(base) * gap, q});
    });
    long shells = 0;
    for (long e = prof.e0() + 1;; ++e, ++shells) {
        Cxl term = prof.integral(e) * std::pow(A / s, static_cast<long double>(e));
        acc += term;
        if (e > prof.ebig() && remainder_bound(modes, e) < target / 2) break;
        if (shells > prof.ebig() - prof.e0() + kOracleShellCap) {
            throw DivergenceError("no decay detected within the shell cap");
        }
    }
    long double constant = (1.0L - std::pow(p, -al)) / (1.0L - std::pow(p, al - n));
    Cxl out = constant * acc;
    return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

std::complex<double> shell_sum_oracle_dl(const PiecewiseRadial<Cx>& u, const std::vector<PAdic>& x,
                                         double alpha, double target_error, int candidate) {
    if (alpha <= 0) throw DomainError("alpha must be positive");
    const long double p = static_cast<long double>(u.p());
    const int n = u.n();
    const long double al = alpha;
    OracleOps ops{al, p};
    PiecewiseRadial<Cxl> uw = widen(u);
    OracleProfile prof(uw, x, ops);
    Cxl ux = prof.value();
    const long double s = std::pow(p, -al);
    const long double A = std::pow(p, -static_cast<long double>(n));
    const long double gap = 1.0L - A;
    std::vector<FarMode> modes = far_modes(prof, ux, s, gap, al, p);

    Cxl acc = 0;
    long shells = 0;
    for (long e = prof.e0() + 1;; ++e, ++shells) {
        Cxl muS{to_long_double(sphere_measure(u.p(), n, e)), 0.0L};
        Cxl term = (prof.integral(e) - ux * muS) * std::pow(A * s, static_cast<long double>(e));
        acc += term;
        if (e > prof.ebig() && remainder_bound(modes, e) < static_cast<long double>(target_error)) break;
        if (shells > prof.ebig() - prof.e0() + kOracleShellCap) {
            throw DivergenceError("no decay detected within the shell cap");
        }
    }
    const long double gamma = al / n;
    long double constant;
    if (candidate == 0) {
        // printed constant of Eq. (2-1): (1 - q^(n gamma)) / (1 - q^(-n(gamma+1)))
        constant = (1.0L - std::pow(p, n * gamma)) / (1.0L - std::pow(p, -n * (gamma + 1.0L)));
    } else {
        // the same with n dropped, as the footnote wonders about
        constant = (1.0L - std::pow(p, gamma)) / (1.0L - std::pow(p, -(gamma + 1.0L)));
    }
    Cxl out = constant * acc;
    return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

PiecewiseRadial<Cx> to_numeric(const PiecewiseRadial<SymbolicScalar>& f, double alpha) {
    double p = static_cast<double>(f.p());
    PiecewiseRadial<Cx> out(f.p(), f.n());
    out.compact = to_numeric_tf(f.compact, alpha);
    for (const auto& tail : f.tails) {
        RadialTail<Cx> t;
        t.center = tail.center;
        t.start_shell = tail.start_shell;
        t.base = Cx{tail.base.eval_at(alpha, p), 0.0};
        t.ratio = tail.ratio;
        out.tails.push_back(std::move(t));
    }
    return out;
}

TestFunction<Cx> to_numeric_tf(const TestFunction<SymbolicScalar>& f, double alpha) {
    double p = static_cast<double>(f.p());
    TestFunction<Cx> out(f.p(), f.n());
    for (const auto& term : f.terms()) {
        out.add_term(term.ball, Cx{term.coeff.eval_at(alpha, p), 0.0});
    }
    return out;
}

} // namespace nak
