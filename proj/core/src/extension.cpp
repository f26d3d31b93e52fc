#include "nakelvin/extension.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace nak {

ExtensionContext::ExtensionContext(long p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (n < 2 || n > 8) throw DomainError("extension degree restricted to [2, 8]");
    modulus_ = find_irreducible(p, n);
}

std::string ExtensionContext::describe() const {
    std::ostringstream os;
    os << "p=" << p_ << ";n=" << n_ << ";modulus=" << fp_poly_to_string(modulus_);
    return os.str();
}

std::shared_ptr<const ExtensionContext> ExtensionContext::get(long p, int n) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::shared_ptr<const ExtensionContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const ExtensionContext>(p, n);
    cache.emplace(key, ctx);
    return ctx;
}

ExtElement::ExtElement(ExtCtxPtr ctx, std::vector<PAdic> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != ctx_->n()) {
        throw DomainError("coordinate vector length must equal the extension degree");
    }
    for (const PAdic& c : coords_) {
        if (c.prime() != ctx_->p()) throw DomainError("coordinate prime differs from context");
    }
}

bool ExtElement::is_zero() const {
    for (const PAdic& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<long> ExtElement::max_norm_exp() const { return vec_norm_exp(coords_); }

std::optional<long> ExtElement::abs_exp() const {
    auto e = max_norm_exp();
    if (!e) return std::nullopt;
    return *e * ctx_->n();
}

ExtElement ExtElement::operator+(const ExtElement& rhs) const {
    if (ctx_.get() != rhs.ctx_.get()) throw DomainError("mixed extension contexts");
    std::vector<PAdic> out;
    out.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] + rhs.coords_[i]);
    return ExtElement(ctx_, std::move(out));
}

ExtElement ExtElement::operator-(const ExtElement& rhs) const {
    if (ctx_.get() != rhs.ctx_.get()) throw DomainError("mixed extension contexts");
    std::vector<PAdic> out;
    out.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] - rhs.coords_[i]);
    return ExtElement(ctx_, std::move(out));
}

ExtElement ExtElement::operator*(const ExtElement& rhs) const {
    if (ctx_.get() != rhs.ctx_.get()) throw DomainError("mixed extension contexts");
    const int n = ctx_->n();
    const long p = ctx_->p();
    std::vector<PAdic> conv(static_cast<size_t>(2 * n - 1), PAdic::zero(p));
    for (int i = 0; i < n; ++i) {
        if (coords_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (rhs.coords_[static_cast<size_t>(j)].is_zero()) continue;
            conv[static_cast<size_t>(i + j)] =
                conv[static_cast<size_t>(i + j)] + coords_[static_cast<size_t>(i)] * rhs.coords_[static_cast<size_t>(j)];
        }
    }
    // reduce modulo the monic modulus: t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
    const FpPoly& m = ctx_->modulus();
    for (int k = 2 * n - 2; k >= n; --k) {
        PAdic c = conv[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        conv[static_cast<size_t>(k)] = PAdic::zero(p);
        for (int j = 0; j < n; ++j) {
            long mj = j < static_cast<int>(m.size()) ? m[static_cast<size_t>(j)] : 0;
            if (mj == 0) continue;
            conv[static_cast<size_t>(k - n + j)] =
                conv[static_cast<size_t>(k - n + j)] - c.mul_int(mj);
        }
    }
    conv.resize(static_cast<size_t>(n), PAdic::zero(p));
    return ExtElement(ctx_, std::move(conv));
}

ResidueElement ExtElement::residue() const {
    FpPoly coeffs(coords_.size(), 0);
    for (size_t i = 0; i < coords_.size(); ++i) {
        const PAdic& c = coords_[i];
        if (c.is_zero()) continue;
        if (c.valuation() < 0) throw DomainError("residue of a non-integral element");
        if (c.valuation() == 0) coeffs[i] = c.digit_at(0);
    }
    return ResidueElement(ctx_->p(), ctx_->modulus(), coeffs);
}

ExtElement ExtElement::one(const ExtCtxPtr& ctx, int precision) {
    std::vector<PAdic> coords(static_cast<size_t>(ctx->n()), PAdic::zero(ctx->p()));
    coords[0] = PAdic::from_int(1, ctx->p(), precision);
    return ExtElement(ctx, std::move(coords));
}

ExtElement ExtElement::zero(const ExtCtxPtr& ctx) {
    return ExtElement(ctx, std::vector<PAdic>(static_cast<size_t>(ctx->n()), PAdic::zero(ctx->p())));
}

ExtElement ExtElement::invert() const {
    auto me = max_norm_exp();
    if (!me) throw DivisionByZeroError("inversion of zero in L");
    const long p = ctx_->p();
    // x = p^m * u with ||u|| = 1
    long m = -*me;
    std::vector<PAdic> ucoords;
    ucoords.reserve(coords_.size());
    int precision = kDefaultPrecision;
    for (const PAdic& c : coords_) {
        if (!c.is_zero() && !c.is_exact()) precision = std::min(precision, c.precision());
        ucoords.push_back(c.shift(-m));
    }
    ExtElement u(ctx_, std::move(ucoords));

    // seed: inverse in the residue field, then Newton  y <- y (2 - u y)
    ResidueElement r0 = u.residue().invert();
    std::vector<PAdic> seed;
    seed.reserve(coords_.size());
    for (int i = 0; i < ctx_->n(); ++i) {
        long c = i < static_cast<int>(r0.coeffs().size()) ? r0.coeffs()[static_cast<size_t>(i)] : 0;
        seed.push_back(c == 0 ? PAdic::zero(p) : PAdic::from_int(c, p, precision));
    }
    ExtElement y(ctx_, std::move(seed));
    ExtElement two(ctx_, [&] {
        std::vector<PAdic> t(static_cast<size_t>(ctx_->n()), PAdic::zero(p));
        t[0] = PAdic::from_int(2, p, precision);
        return t;
    }());
    int steps = 1;
    while ((1 << steps) < precision + 1) ++steps;
    for (int i = 0; i <= steps; ++i) {
        y = y * (two - u * y);
    }
    std::vector<PAdic> out;
    out.reserve(coords_.size());
    for (const PAdic& c : y.coords()) out.push_back(c.shift(-m));
    return ExtElement(ctx_, std::move(out));
}

ExtElement iso_U(const ExtCtxPtr& ctx, const std::vector<PAdic>& v) {
    if (static_cast<int>(v.size()) != ctx->n()) throw DomainError("vector length must equal n");
    return ExtElement(ctx, v);
}

std::vector<PAdic> iso_U_inv(const ExtElement& a) { return a.coords(); }

} // namespace nak
