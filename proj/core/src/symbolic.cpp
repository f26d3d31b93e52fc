#include "nakelvin/symbolic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <cmath>
#include <sstream>

namespace nak {

RatPoly poly_trim(RatPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), BigRat(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return poly_trim(std::move(out));
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), BigRat(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return poly_trim(std::move(out));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

namespace {

RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigRat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = poly_trim(std::move(a));
        if (a.size() >= b.size() && !a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

RatPoly poly_monic(RatPoly a) {
    if (a.empty()) return a;
    BigRat lead = a.back();
    for (BigRat& c : a) c /= lead;
    return a;
}

} // namespace

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

BigRat poly_eval(const RatPoly& a, const BigRat& x) {
    BigRat acc(0);
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

double poly_eval_d(const RatPoly& a, double x) {
    double acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + to_double(a[i]);
    return acc;
}

SymbolicScalar::SymbolicScalar(const BigRat& c) : num_{}, den_{BigRat(1)} {
    if (c != 0) num_ = {c};
}

SymbolicScalar::SymbolicScalar(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

SymbolicScalar SymbolicScalar::monomial(const BigRat& c, long k) {
    if (c == 0) return zero();
    if (k >= 0) {
        RatPoly num(static_cast<size_t>(k) + 1, BigRat(0));
        num.back() = c;
        return SymbolicScalar(std::move(num), {BigRat(1)});
    }
    RatPoly den(static_cast<size_t>(-k) + 1, BigRat(0));
    den.back() = BigRat(1);
    return SymbolicScalar({c}, std::move(den));
}

void SymbolicScalar::normalize() {
    num_ = poly_trim(std::move(num_));
    den_ = poly_trim(std::move(den_));
    if (den_.empty()) throw DomainError("zero denominator in Q(s)");
    if (num_.empty()) {
        den_ = {BigRat(1)};
        return;
    }
    // monomial denominator c*s^k: cancellation is a plain power shift
    bool monomial_den = true;
    for (size_t i = 0; i + 1 < den_.size(); ++i) {
        if (den_[i] != 0) { monomial_den = false; break; }
    }
    if (monomial_den) {
        size_t ord = 0;
        while (ord < num_.size() && num_[ord] == 0) ++ord;
        size_t k = den_.size() - 1;
        size_t shift = std::min(ord, k);
        if (shift > 0) num_.erase(num_.begin(), num_.begin() + static_cast<long>(shift));
        BigRat lead = den_.back();
        den_.assign(k - shift + 1, BigRat(0));
        den_.back() = BigRat(1);
        for (BigRat& c : num_) c /= lead;
        return;
    }
    RatPoly g = poly_gcd(num_, den_);
    if (g.size() > 1) {
        // exact division by the gcd
        auto divide = [](const RatPoly& a, const RatPoly& g2) {
            RatPoly rem = a, q(a.size() >= g2.size() ? a.size() - g2.size() + 1 : 0, BigRat(0));
            while (rem.size() >= g2.size() && !rem.empty()) {
                BigRat c = rem.back() / g2.back();
                size_t shift = rem.size() - g2.size();
                q[shift] = c;
                for (size_t i = 0; i < g2.size(); ++i) rem[shift + i] -= c * g2[i];
                rem = poly_trim(std::move(rem));
            }
            return q;
        };
        num_ = poly_trim(divide(num_, g));
        den_ = poly_trim(divide(den_, g));
    }
    BigRat lead = den_.back();
    for (BigRat& c : den_) c /= lead;
    for (BigRat& c : num_) c /= lead;
}

SymbolicScalar SymbolicScalar::operator-() const {
    RatPoly n = num_;
    for (BigRat& c : n) c = -c;
    SymbolicScalar out;
    out.num_ = std::move(n);
    out.den_ = den_;
    return out;
}

SymbolicScalar SymbolicScalar::operator+(const SymbolicScalar& rhs) const {
    return SymbolicScalar(poly_add(poly_mul(num_, rhs.den_), poly_mul(rhs.num_, den_)),
                          poly_mul(den_, rhs.den_));
}

SymbolicScalar SymbolicScalar::operator-(const SymbolicScalar& rhs) const {
    return SymbolicScalar(poly_sub(poly_mul(num_, rhs.den_), poly_mul(rhs.num_, den_)),
                          poly_mul(den_, rhs.den_));
}

SymbolicScalar SymbolicScalar::operator*(const SymbolicScalar& rhs) const {
    return SymbolicScalar(poly_mul(num_, rhs.num_), poly_mul(den_, rhs.den_));
}

SymbolicScalar SymbolicScalar::operator/(const SymbolicScalar& rhs) const {
    if (rhs.is_zero()) throw DivisionByZeroError("division by zero in Q(s)");
    return SymbolicScalar(poly_mul(num_, rhs.den_), poly_mul(den_, rhs.num_));
}

SymbolicScalar SymbolicScalar::pow(long k) const {
    if (k == 0) return one();
    if (is_zero()) {
        if (k < 0) throw DivisionByZeroError("0^negative in Q(s)");
        return zero();
    }
    SymbolicScalar base = k > 0 ? *this : one() / *this;
    long e = k > 0 ? k : -k;
    SymbolicScalar acc = one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

double SymbolicScalar::eval_at(double alpha, double p) const {
    // Horner in 50-digit floats: the exact coefficients can span dozens of
    // orders of magnitude, far beyond what double Horner resolves
    using big_float = boost::multiprecision::cpp_bin_float_50;
    big_float s(std::pow(p, -alpha));
    auto horner = [&s](const RatPoly& a) {
        big_float acc(0);
        for (size_t i = a.size(); i-- > 0;) {
            acc = acc * s + big_float(a[i]);
        }
        return acc;
    };
    big_float d = horner(den_);
    if (abs(d) < big_float("1e-280")) {
        throw DivergenceError("pole of rational function at this alpha");
    }
    return static_cast<double>(horner(num_) / d);
}

BigRat SymbolicScalar::eval_at_s(const BigRat& s) const {
    BigRat d = poly_eval(den_, s);
    if (d == 0) throw DivergenceError("pole of rational function at this s");
    return poly_eval(num_, s) / d;
}

namespace {

std::string poly_str(const RatPoly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        BigRat c = a[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << "*";
            os << "s";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace

std::string SymbolicScalar::str() const {
    if (is_zero()) return "0";
    if (den_.size() == 1 && den_[0] == 1) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

namespace {

// small recursive-descent parser over +,-,*,/,^ with 's' and rationals
struct ScalarParser {
    const std::string& text;
    size_t pos = 0;

    explicit ScalarParser(const std::string& t) : text(t) {}

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    SymbolicScalar parse_expr() {
        SymbolicScalar acc = parse_term();
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }
    SymbolicScalar parse_term() {
        SymbolicScalar acc = parse_factor();
        for (;;) {
            if (eat('*')) acc = acc * parse_factor();
            else if (eat('/')) acc = acc / parse_factor();
            else {
                // implicit multiplication: ")(", ")s", number followed by s/(
                skip();
                if (pos < text.size() && (text[pos] == '(' || text[pos] == 's')) {
                    acc = acc * parse_factor();
                } else {
                    return acc;
                }
            }
        }
    }
    SymbolicScalar parse_factor() {
        SymbolicScalar base = parse_atom();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError("missing exponent in '" + text + "'");
            long e = std::stol(text.substr(start, pos - start));
            return base.pow(neg ? -e : e);
        }
        return base;
    }
    SymbolicScalar parse_atom() {
        skip();
        if (pos >= text.size()) throw ParseError("unexpected end of '" + text + "'");
        if (eat('(')) {
            SymbolicScalar inner = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in '" + text + "'");
            return inner;
        }
        if (eat('-')) return -parse_atom();
        if (text[pos] == 's') {
            ++pos;
            return SymbolicScalar::monomial(BigRat(1), 1);
        }
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("unexpected character in '" + text + "'");
        BigInt numv(text.substr(start, pos - start));
        skip();
        if (pos < text.size() && text[pos] == '/' ) {
            // only a rational literal when a digit follows directly
            size_t save = pos;
            ++pos;
            skip();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos > dstart) {
                // lookahead: if the next meaningful char continues a literal
                // (not '(' or 's'), treat as rational literal
                BigInt denv(text.substr(dstart, pos - dstart));
                return SymbolicScalar(BigRat(numv, denv));
            }
            pos = save;
        }
        return SymbolicScalar(BigRat(numv));
    }
};

} // namespace

SymbolicScalar SymbolicScalar::parse(const std::string& text) {
    ScalarParser p(text);
    SymbolicScalar out = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("trailing input in '" + text + "'");
    return out;
}

SymbolicScalar MonomialRatio::pow_scalar(long k) const {
    if (c == 0) {
        if (k < 0) throw DivisionByZeroError("0^negative ratio power");
        return k == 0 ? SymbolicScalar::one() : SymbolicScalar::zero();
    }
    BigRat base = k >= 0 ? c : BigRat(1) / c;
    long e = k >= 0 ? k : -k;
    BigRat acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return SymbolicScalar::monomial(acc, spow * k);
}

double MonomialRatio::eval(double alpha, double p) const {
    return to_double(c) * std::pow(p, -alpha * static_cast<double>(spow));
}

AlphaRegion AlphaRegion::ratio_bound(const MonomialRatio& r, double p) {
    double ac = std::abs(to_double(r.c));
    if (ac == 0.0) return {0.0, 1e300};
    double lnc = std::log(ac);
    double lnp = std::log(p);
    if (r.spow == 0) {
        if (ac < 1.0) return {0.0, 1e300};
        return {1e300, 0.0}; // empty
    }
    double bound = lnc / (static_cast<double>(r.spow) * lnp);
    if (r.spow > 0) return {std::max(0.0, bound), 1e300};
    return {0.0, bound};
}

SymbolicScalar geometric_tail(long k0, const SymbolicScalar& ratio) {
    SymbolicScalar one_minus = SymbolicScalar::one() - ratio;
    if (one_minus.is_zero()) throw DivergenceError("geometric series with ratio 1");
    if (ratio.is_zero()) return k0 == 0 ? SymbolicScalar::one() : SymbolicScalar::zero();
    return ratio.pow(k0) / one_minus;
}

SymbolicScalar geometric_down(long k0, const SymbolicScalar& ratio) {
    if (ratio.is_zero()) throw DivisionByZeroError("downward geometric series with ratio 0");
    SymbolicScalar inv = SymbolicScalar::one() / ratio;
    SymbolicScalar one_minus = SymbolicScalar::one() - inv;
    if (one_minus.is_zero()) throw DivergenceError("geometric series with ratio 1");
    return ratio.pow(k0) / one_minus;
}

SymbolicScalar scalar_c(int n, long p) {
    if (n < 1) throw DomainError("n must be >= 1");
    // (1/s - 1) / (1 - p^-n s)
    SymbolicScalar num = SymbolicScalar::monomial(BigRat(1), -1) - SymbolicScalar::one();
    SymbolicScalar den = SymbolicScalar::one() - SymbolicScalar::monomial(rat_pow(p, -n), 1);
    return num / den;
}

SymbolicScalar scalar_c_printed(int n, long p) {
    if (n < 1) throw DomainError("n must be >= 1");
    SymbolicScalar num(BigRat(p - 1));
    SymbolicScalar den = SymbolicScalar::one() - SymbolicScalar::monomial(rat_pow(p, -n), 1);
    return num / den;
}

SymbolicScalar scalar_dl(int n, long p) {
    if (n < 1) throw DomainError("n must be >= 1");
    // (1 - 1/s) / (1 - p^-n s)
    SymbolicScalar num = SymbolicScalar::one() - SymbolicScalar::monomial(BigRat(1), -1);
    SymbolicScalar den = SymbolicScalar::one() - SymbolicScalar::monomial(rat_pow(p, -n), 1);
    return num / den;
}

SymbolicScalar scalar_d(int n, long p) {
    if (n < 1) throw DomainError("n must be >= 1");
    // (1 - s) / (1 - p^-n / s)
    SymbolicScalar num = SymbolicScalar::one() - SymbolicScalar::monomial(BigRat(1), 1);
    SymbolicScalar den = SymbolicScalar::one() - SymbolicScalar::monomial(rat_pow(p, -n), -1);
    return num / den;
}

} // namespace nak
