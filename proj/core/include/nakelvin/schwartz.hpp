#pragma once

#include "nakelvin/coeff.hpp"
#include "nakelvin/errors.hpp"
#include "nakelvin/padic.hpp"

#include <map>
#include <string>
#include <vector>

namespace nak {

inline constexpr size_t kRefinementGuard = 1'000'000;

// Max-norm ball {x : ||x - center|| <= p^(-radius_exp)} in K^n.
// The center is the canonical coset representative: every coordinate is an
// exact expansion reduced modulo p^radius_exp, so ball equality is a digit
// comparison and two balls of one radius are disjoint or identical.
class Ball {
public:
    Ball(long p, std::vector<PAdic> center, long radius_exp);

    long p() const { return p_; }
    int n() const { return static_cast<int>(center_.size()); }
    long radius_exp() const { return radius_exp_; }
    const std::vector<PAdic>& center() const { return center_; }

    BigRat measure() const; // p^(-radius_exp * n); the unit ball has measure 1

    bool contains(const std::vector<PAdic>& x) const;
    bool contains_origin() const;

    // exponent e with ||center|| = p^e; nullopt for the origin ball
    std::optional<long> center_norm_exp() const;

    // partition into the p^(n*(finer - radius_exp)) sub-balls of radius
    // p^(-finer); guard: throws ResourceLimitError past kRefinementGuard
    std::vector<Ball> refine(long finer) const;

    static int cmp(const Ball& a, const Ball& b);
    bool operator==(const Ball& b) const { return cmp(*this, b) == 0; }
    bool operator<(const Ball& b) const { return cmp(*this, b) < 0; }

    // unit ball Z_p^n
    static Ball unit(long p, int n);

private:
    long p_;
    long radius_exp_;
    std::vector<PAdic> center_;
};

// Bruhat-Schwartz test function: a finite combination of ball indicators.
template <class C>
class TestFunction {
public:
    struct Term {
        Ball ball;
        C coeff;
    };

    TestFunction(long p, int n) : p_(p), n_(n) {}

    long p() const { return p_; }
    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool canonical() const { return canonical_; }

    void add_term(const Ball& b, const C& coeff) {
        if (b.p() != p_ || b.n() != n_) throw DomainError("ball context mismatch");
        terms_.push_back({b, coeff});
        canonical_ = false;
    }

    static TestFunction indicator(const Ball& b, const C& coeff) {
        TestFunction f(b.p(), b.n());
        f.add_term(b, coeff);
        return f;
    }

    // Refine every term to the finest radius present, merge coincident
    // balls, drop zero coefficients. Idempotent, evaluation-preserving.
    TestFunction canonicalize() const;

    // Sum of the coefficients of all balls containing x; exact membership.
    C evaluate(const std::vector<PAdic>& x) const;

    // Haar integral: sum of coeff * measure over canonical terms.
    C integrate() const;

    TestFunction operator+(const TestFunction& rhs) const;
    TestFunction operator-() const;
    TestFunction scaled(const C& factor) const;

    // x -> f(x - a)
    TestFunction translated(const std::vector<PAdic>& a) const;
    // x -> f(p^v x)
    TestFunction scaled_arg(long v) const;

    // finest radius exponent present (throws on an empty function)
    long finest_radius_exp() const;

    bool empty() const { return terms_.empty(); }

private:
    long p_;
    int n_;
    std::vector<Term> terms_;
    bool canonical_ = false;
};

// 0-centered or shifted geometric radial tail:
// value base * ratio^k on the sphere ||x - center|| = p^k for k >= start_shell,
// zero below. Kelvin images and Vladimirov-Taibleson images live here.
template <class C>
struct RadialTail {
    std::vector<PAdic> center;
    long start_shell;
    C base;
    MonomialRatio ratio;
};

// A test function plus finitely many radial tails, evaluated additively.
template <class C>
struct PiecewiseRadial {
    TestFunction<C> compact;
    std::vector<RadialTail<C>> tails;

    explicit PiecewiseRadial(TestFunction<C> f) : compact(std::move(f)) {}
    PiecewiseRadial(long p, int n) : compact(p, n) {}

    long p() const { return compact.p(); }
    int n() const { return compact.n(); }
};

template <class C, class Ops>
C evaluate_piecewise(const PiecewiseRadial<C>& f, const std::vector<PAdic>& x, const Ops& ops);

// distance helpers shared by geometry and evaluation ------------------------

// exponent e with ||a - b|| = p^e; nullopt when the difference vanishes to
// the full known window; PrecisionError when a hidden digit could dominate
std::optional<long> vec_dist_exp(const std::vector<PAdic>& a, const std::vector<PAdic>& b);

// for the nullopt case: bound B with ||a - b|| <= p^B
long vec_dist_zero_bound(const std::vector<PAdic>& a, const std::vector<PAdic>& b);


extern template class TestFunction<SymbolicScalar>;
extern template class TestFunction<std::complex<double>>;
extern template class TestFunction<std::complex<long double>>;

template <class C, class Ops>
C evaluate_piecewise(const PiecewiseRadial<C>& f, const std::vector<PAdic>& x, const Ops& ops) {
    C acc = f.compact.evaluate(x);
    for (const RadialTail<C>& t : f.tails) {
        auto d = vec_dist_exp(x, t.center);
        if (!d) {
            long bound = vec_dist_zero_bound(x, t.center);
            if (bound == LONG_MIN || bound < t.start_shell) continue; // below the support
            throw PrecisionError("tail shell index undecidable at this precision");
        }
        if (*d < t.start_shell) continue;
        acc = acc + t.base * ops.ratio_pow(t.ratio, *d);
    }
    return acc;
}

} // namespace nak
