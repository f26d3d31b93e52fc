#include "nakelvin/schwartz.hpp"

#include <algorithm>

namespace nak {

Ball::Ball(long p, std::vector<PAdic> center, long radius_exp)
    : p_(p), radius_exp_(radius_exp), center_(std::move(center)) {
    if (center_.empty()) throw DomainError("ball needs at least one coordinate");
    for (PAdic& c : center_) {
        if (c.prime() != p_) throw DomainError("center prime mismatch");
        c = c.reduce_mod(radius_exp_);
    }
}

BigRat Ball::measure() const { return rat_pow(p_, -radius_exp_ * n()); }

bool Ball::contains(const std::vector<PAdic>& x) const {
    if (static_cast<int>(x.size()) != n()) throw DomainError("point dimension mismatch");
    for (size_t i = 0; i < center_.size(); ++i) {
        long end = 0;
        auto v = PAdic::diff_valuation(x[i], center_[i], radius_exp_, &end);
        if (v) return false; // a digit differs below the radius
        if (end < radius_exp_) {
            throw PrecisionError("membership undecidable at this precision");
        }
    }
    return true;
}

bool Ball::contains_origin() const {
    for (const PAdic& c : center_)
        if (!c.is_exact_zero()) return false;
    return true;
}

std::optional<long> Ball::center_norm_exp() const { return vec_norm_exp(center_); }

std::vector<Ball> Ball::refine(long finer) const {
    if (finer < radius_exp_) throw DomainError("refinement must not coarsen");
    long steps = finer - radius_exp_;
    if (steps == 0) return {*this};
    double count = std::pow(static_cast<double>(p_), static_cast<double>(steps * n()));
    if (count > static_cast<double>(kRefinementGuard)) {
        throw ResourceLimitError("sub-ball refinement would exceed the term guard");
    }
    std::vector<Ball> out;
    out.reserve(static_cast<size_t>(count));
    // odometer over n coordinates x `steps` digit positions
    std::vector<int32_t> digits(static_cast<size_t>(n()) * static_cast<size_t>(steps), 0);
    for (;;) {
        std::vector<PAdic> c = center_;
        for (int j = 0; j < n(); ++j) {
            for (long t = 0; t < steps; ++t) {
                int32_t d = digits[static_cast<size_t>(j) * static_cast<size_t>(steps) + static_cast<size_t>(t)];
                if (d != 0) {
                    c[static_cast<size_t>(j)] =
                        c[static_cast<size_t>(j)] + PAdic(p_, radius_exp_ + t, {d}, true);
                }
            }
        }
        out.emplace_back(p_, std::move(c), finer);
        // increment
        size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < p_) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    return out;
}

int Ball::cmp(const Ball& a, const Ball& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_ ? -1 : 1;
    if (a.radius_exp_ != b.radius_exp_) return a.radius_exp_ < b.radius_exp_ ? -1 : 1;
    if (a.center_.size() != b.center_.size()) return a.center_.size() < b.center_.size() ? -1 : 1;
    for (size_t i = 0; i < a.center_.size(); ++i) {
        int c = PAdic::cmp_exact(a.center_[i], b.center_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Ball Ball::unit(long p, int n) {
    return Ball(p, std::vector<PAdic>(static_cast<size_t>(n), PAdic::zero(p)), 0);
}

template <class C>
TestFunction<C> TestFunction<C>::canonicalize() const {
    TestFunction out(p_, n_);
    if (terms_.empty()) {
        out.canonical_ = true;
        return out;
    }
    long finest = terms_[0].ball.radius_exp();
    for (const Term& t : terms_) finest = std::max(finest, t.ball.radius_exp());
    double total = 0;
    for (const Term& t : terms_) {
        total += std::pow(static_cast<double>(p_),
                          static_cast<double>((finest - t.ball.radius_exp()) * n_));
        if (total > static_cast<double>(kRefinementGuard)) {
            throw ResourceLimitError("canonicalization would exceed the term guard");
        }
    }
    std::map<Ball, C> acc;
    for (const Term& t : terms_) {
        for (Ball& sub : t.ball.refine(finest)) {
            auto it = acc.find(sub);
            if (it == acc.end()) {
                acc.emplace(std::move(sub), t.coeff);
            } else {
                it->second = it->second + t.coeff;
            }
        }
    }
    for (auto& [ball, coeff] : acc) {
        if (!coeff_is_zero(coeff)) out.terms_.push_back({ball, coeff});
    }
    out.canonical_ = true;
    return out;
}

template <class C>
C TestFunction<C>::evaluate(const std::vector<PAdic>& x) const {
    C acc = coeff_from_rat<C>(BigRat(0));
    for (const Term& t : terms_) {
        if (t.ball.contains(x)) acc = acc + t.coeff;
    }
    return acc;
}

template <class C>
C TestFunction<C>::integrate() const {
    C acc = coeff_from_rat<C>(BigRat(0));
    for (const Term& t : terms_) {
        acc = acc + t.coeff * coeff_from_rat<C>(t.ball.measure());
    }
    return acc;
}

template <class C>
TestFunction<C> TestFunction<C>::operator+(const TestFunction& rhs) const {
    if (p_ != rhs.p_ || n_ != rhs.n_) throw DomainError("context mismatch in sum");
    TestFunction out(p_, n_);
    out.terms_ = terms_;
    out.terms_.insert(out.terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    return out;
}

template <class C>
TestFunction<C> TestFunction<C>::operator-() const {
    TestFunction out(p_, n_);
    for (const Term& t : terms_) out.terms_.push_back({t.ball, C{} - t.coeff});
    return out;
}

template <class C>
TestFunction<C> TestFunction<C>::scaled(const C& factor) const {
    TestFunction out(p_, n_);
    for (const Term& t : terms_) out.terms_.push_back({t.ball, t.coeff * factor});
    return out;
}

template <class C>
TestFunction<C> TestFunction<C>::translated(const std::vector<PAdic>& a) const {
    TestFunction out(p_, n_);
    for (const Term& t : terms_) {
        out.terms_.push_back({Ball(p_, vec_add(t.ball.center(), a), t.ball.radius_exp()), t.coeff});
    }
    return out;
}

template <class C>
TestFunction<C> TestFunction<C>::scaled_arg(long v) const {
    TestFunction out(p_, n_);
    for (const Term& t : terms_) {
        std::vector<PAdic> c;
        c.reserve(t.ball.center().size());
        for (const PAdic& ci : t.ball.center()) c.push_back(ci.shift(-v));
        out.terms_.push_back({Ball(p_, std::move(c), t.ball.radius_exp() - v), t.coeff});
    }
    return out;
}

template <class C>
long TestFunction<C>::finest_radius_exp() const {
    if (terms_.empty()) throw DomainError("empty test function has no radius");
    long finest = terms_[0].ball.radius_exp();
    for (const Term& t : terms_) finest = std::max(finest, t.ball.radius_exp());
    return finest;
}

std::optional<long> vec_dist_exp(const std::vector<PAdic>& a, const std::vector<PAdic>& b) {
    std::optional<long> best;
    long hidden = LONG_MIN; // largest norm a zero-to-window coordinate could hide
    for (size_t i = 0; i < a.size(); ++i) {
        long end = 0;
        auto v = PAdic::diff_valuation(a[i], b[i], LONG_MAX, &end);
        if (v) {
            long e = -*v;
            if (!best || e > *best) best = e;
        } else if (!(a[i].is_exact() && b[i].is_exact())) {
            hidden = std::max(hidden, -end);
        }
    }
    if (best) {
        if (hidden >= *best) throw PrecisionError("distance undecidable at this precision");
        return best;
    }
    return std::nullopt;
}

long vec_dist_zero_bound(const std::vector<PAdic>& a, const std::vector<PAdic>& b) {
    long bound = LONG_MIN;
    for (size_t i = 0; i < a.size(); ++i) {
        long end = 0;
        auto v = PAdic::diff_valuation(a[i], b[i], LONG_MAX, &end);
        if (v) return LONG_MAX; // nonzero difference: no zero bound applies
        if (!(a[i].is_exact() && b[i].is_exact())) bound = std::max(bound, -end);
    }
    return bound;
}

template class TestFunction<SymbolicScalar>;
template class TestFunction<std::complex<double>>;
template class TestFunction<std::complex<long double>>;

} // namespace nak
