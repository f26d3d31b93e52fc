#include "nakelvin/padic.hpp"

#include <algorithm>
#include <sstream>

namespace nak {

bool is_prime(long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

long int_valuation(const BigInt& v, long p) {
    if (v == 0) throw DomainError("valuation of zero integer");
    BigInt n = boost::multiprecision::abs(v);
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

namespace {

long modinv(long a, long p) {
    // extended Euclid; a not divisible by p
    long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    return ((t % p) + p) % p;
}

} // namespace

PAdic PAdic::zero(long p) {
    PAdic x;
    x.prime_ = p;
    x.zero_ = true;
    x.exact_ = true;
    return x;
}

PAdic PAdic::zero_to(long p, long end) {
    PAdic x;
    x.prime_ = p;
    x.zero_ = true;
    x.exact_ = false;
    x.val_ = end;
    return x;
}

PAdic::PAdic(long p, long val, std::vector<int32_t> digits, bool exact)
    : prime_(p), zero_(false), exact_(exact), val_(val), digits_(std::move(digits)) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    for (int32_t d : digits_) {
        if (d < 0 || d >= p) throw DomainError("digit out of [0, p-1]");
    }
    normalize();
}

void PAdic::normalize() {
    size_t lead = 0;
    while (lead < digits_.size() && digits_[lead] == 0) ++lead;
    if (lead == digits_.size()) {
        long end = val_ + static_cast<long>(digits_.size());
        bool ex = exact_;
        digits_.clear();
        zero_ = true;
        exact_ = ex;
        val_ = ex ? 0 : end;
        return;
    }
    if (lead > 0) {
        digits_.erase(digits_.begin(), digits_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    if (exact_) {
        while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
    }
    zero_ = false;
}

PAdic PAdic::from_rational(const BigInt& num, const BigInt& den, long p, int precision) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (den == 0) throw DomainError("denominator is zero");
    if (precision < 1) throw DomainError("precision must be positive");
    if (num == 0) return zero(p);

    BigInt n = num, d = den;
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }

    // digits of the unit n/d by repeated division
    BigInt dp(p);
    BigInt d0 = ((d % dp) + dp) % dp;
    long dinv = modinv(d0.convert_to<long>(), p);
    std::vector<int32_t> out;
    out.reserve(static_cast<size_t>(precision));
    bool terminated = false;
    for (int i = 0; i < precision; ++i) {
        if (n == 0) { terminated = true; break; }
        BigInt ni = ((n % dp) + dp) % dp;
        long digit = (ni.convert_to<long>() * dinv) % p;
        out.push_back(static_cast<int32_t>(digit));
        n = (n - digit * d) / dp;
    }
    if (n == 0) terminated = true;
    if (out.empty()) return zero(p); // cannot happen for unit n, kept for safety
    return PAdic(p, v, std::move(out), terminated);
}

PAdic PAdic::from_int(long value, long p, int precision) {
    return from_rational(BigInt(value), BigInt(1), p, precision);
}

long PAdic::valuation() const {
    if (zero_) throw DomainError("valuation of zero");
    return val_;
}

int PAdic::precision() const {
    return static_cast<int>(digits_.size());
}

long PAdic::known_end() const {
    if (exact_) return LONG_MAX;
    if (zero_) return val_;
    return val_ + static_cast<long>(digits_.size());
}

int PAdic::digit_at(long pos) const {
    if (zero_) {
        if (exact_ || pos < val_) return 0;
        throw PrecisionError("digit beyond known window of zero");
    }
    if (pos < val_) return 0;
    long idx = pos - val_;
    if (idx < static_cast<long>(digits_.size())) return digits_[static_cast<size_t>(idx)];
    if (exact_) return 0;
    throw PrecisionError("digit beyond precision window");
}

std::optional<long> PAdic::norm_exp() const {
    if (zero_) return std::nullopt;
    return -val_;
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    size_t len = digits_.size();
    if (exact_) len = std::max(len, static_cast<size_t>(kDefaultPrecision));
    std::vector<int32_t> out(len);
    out[0] = static_cast<int32_t>(prime_ - digits_[0]);
    for (size_t i = 1; i < len; ++i) {
        int32_t d = i < digits_.size() ? digits_[i] : 0;
        out[i] = static_cast<int32_t>(prime_ - 1 - d);
    }
    PAdic r;
    r.prime_ = prime_;
    r.zero_ = false;
    // -x has a terminating expansion only for x = 0
    r.exact_ = false;
    r.val_ = val_;
    r.digits_ = std::move(out);
    r.normalize();
    return r;
}

PAdic PAdic::operator+(const PAdic& rhs) const {
    if (prime_ != rhs.prime_) throw DomainError("mixed primes in addition");
    if (zero_ && exact_) return rhs;
    if (rhs.zero_ && rhs.exact_) return *this;
    long e1 = known_end(), e2 = rhs.known_end();
    long end = std::min(e1, e2);
    if (zero_ && rhs.zero_) return zero_to(prime_, end);
    if (zero_) {
        // rhs truncated to the window where the sum is known
        if (rhs.val_ >= end) return zero_to(prime_, end);
        std::vector<int32_t> d(rhs.digits_.begin(),
                               rhs.digits_.begin() + std::min<long>(static_cast<long>(rhs.digits_.size()), end - rhs.val_));
        PAdic r;
        r.prime_ = prime_;
        r.zero_ = false;
        r.exact_ = false;
        r.val_ = rhs.val_;
        r.digits_ = std::move(d);
        r.normalize();
        return r;
    }
    if (rhs.zero_) return rhs + *this;

    long v = std::min(val_, rhs.val_);
    bool ex = exact_ && rhs.exact_;
    long hi = ex ? std::max(val_ + static_cast<long>(digits_.size()),
                            rhs.val_ + static_cast<long>(rhs.digits_.size()))
                 : end;
    if (hi <= v) return zero_to(prime_, hi);
    std::vector<int32_t> out(static_cast<size_t>(hi - v) + (ex ? 1 : 0), 0);
    long carry = 0;
    for (long pos = v; pos < hi; ++pos) {
        long sum = carry;
        if (pos >= val_ && pos - val_ < static_cast<long>(digits_.size()))
            sum += digits_[static_cast<size_t>(pos - val_)];
        if (pos >= rhs.val_ && pos - rhs.val_ < static_cast<long>(rhs.digits_.size()))
            sum += rhs.digits_[static_cast<size_t>(pos - rhs.val_)];
        out[static_cast<size_t>(pos - v)] = static_cast<int32_t>(sum % prime_);
        carry = sum / prime_;
    }
    if (ex && carry) out.back() = static_cast<int32_t>(carry);
    PAdic r;
    r.prime_ = prime_;
    r.zero_ = false;
    r.exact_ = ex;
    r.val_ = v;
    r.digits_ = std::move(out);
    r.normalize();
    return r;
}

PAdic PAdic::operator-(const PAdic& rhs) const { return *this + (-rhs); }

PAdic PAdic::operator*(const PAdic& rhs) const {
    if (prime_ != rhs.prime_) throw DomainError("mixed primes in multiplication");
    if (zero_ || rhs.zero_) {
        if ((zero_ && exact_) || (rhs.zero_ && rhs.exact_)) return zero(prime_);
        // |ab| <= p^-(end_a + val_b) etc.; both-zero uses both ends
        long ea = zero_ ? val_ : this->val_;
        long eb = rhs.zero_ ? rhs.val_ : rhs.val_;
        return zero_to(prime_, ea + eb);
    }
    bool ex = exact_ && rhs.exact_;
    size_t la = digits_.size(), lb = rhs.digits_.size();
    // relative precision: exact factors do not limit the window
    size_t len;
    if (ex) {
        len = la + lb;
    } else if (exact_) {
        len = lb;
    } else if (rhs.exact_) {
        len = la;
    } else {
        len = std::min(la, lb);
    }
    std::vector<int32_t> out(len);
    unsigned __int128 carry = 0;
    for (size_t k = 0; k < len; ++k) {
        unsigned __int128 acc = carry;
        size_t jlo = k >= lb - 1 ? k - (lb - 1) : 0;
        for (size_t j = jlo; j <= k && j < la; ++j) {
            acc += static_cast<unsigned __int128>(digits_[j]) * static_cast<unsigned __int128>(rhs.digits_[k - j]);
        }
        out[k] = static_cast<int32_t>(acc % static_cast<unsigned>(prime_));
        carry = acc / static_cast<unsigned>(prime_);
    }
    PAdic r;
    r.prime_ = prime_;
    r.zero_ = false;
    r.exact_ = ex;
    r.val_ = val_ + rhs.val_;
    r.digits_ = std::move(out);
    r.normalize();
    return r;
}

PAdic PAdic::mul_int(long k) const {
    if (k == 0) return zero(prime_);
    PAdic f = from_int(k, prime_, zero_ ? kDefaultPrecision : std::max<int>(1, static_cast<int>(digits_.size())));
    return *this * f;
}

PAdic PAdic::invert() const {
    if (zero_) throw DivisionByZeroError("p-adic inversion of zero");
    int n = exact_ ? std::max<int>(kDefaultPrecision, static_cast<int>(digits_.size()))
                   : static_cast<int>(digits_.size());
    // long division: find q with q * u = 1 + O(p^n)
    std::vector<long long> rem(static_cast<size_t>(n) + 1, 0);
    rem[0] = 1;
    long inv0 = modinv(digits_[0], prime_);
    std::vector<int32_t> out(static_cast<size_t>(n));
    bool terminated = false;
    for (int i = 0; i < n; ++i) {
        long long ri = rem[static_cast<size_t>(i)] % prime_;
        ri = (ri % prime_ + prime_) % prime_;
        long long q = (ri * inv0) % prime_;
        out[static_cast<size_t>(i)] = static_cast<int32_t>(q);
        if (q != 0) {
            for (size_t j = 0; j < digits_.size() && i + static_cast<long>(j) <= n; ++j) {
                rem[static_cast<size_t>(i) + j] -= q * digits_[j];
            }
        }
        rem[static_cast<size_t>(i) + 1] += rem[static_cast<size_t>(i)] / prime_;
        rem[static_cast<size_t>(i)] = 0;
        if (i + 1 == n) {
            bool all_zero = true;
            for (long long v : rem)
                if (v != 0) { all_zero = false; break; }
            terminated = all_zero && exact_;
        }
    }
    PAdic r;
    r.prime_ = prime_;
    r.zero_ = false;
    r.exact_ = terminated;
    r.val_ = -val_;
    r.digits_ = std::move(out);
    r.normalize();
    return r;
}

PAdic PAdic::shift(long k) const {
    PAdic r = *this;
    r.val_ += k;
    return r;
}

PAdic PAdic::reduce_mod(long r) const {
    if (zero_) {
        if (exact_ || val_ >= r) return zero(prime_);
        throw PrecisionError("cannot reduce an under-resolved zero");
    }
    if (val_ >= r) return zero(prime_);
    if (!exact_ && known_end() < r) throw PrecisionError("window does not reach reduction position");
    long len = std::min<long>(static_cast<long>(digits_.size()), r - val_);
    std::vector<int32_t> d(digits_.begin(), digits_.begin() + len);
    PAdic out;
    out.prime_ = prime_;
    out.zero_ = false;
    out.exact_ = true;
    out.val_ = val_;
    out.digits_ = std::move(d);
    out.normalize();
    return out;
}

bool PAdic::divisible_by_pow(long r) const {
    if (zero_) {
        if (exact_ || val_ >= r) return true;
        throw PrecisionError("divisibility undecidable at this precision");
    }
    return val_ >= r;
}

BigRat PAdic::to_rational() const {
    if (zero_) {
        if (!exact_) throw PrecisionError("approximate zero has no exact rational value");
        return BigRat(0);
    }
    if (!exact_) throw PrecisionError("non-terminating expansion has no exact rational value");
    BigRat acc(0);
    for (size_t i = 0; i < digits_.size(); ++i) {
        acc += BigRat(digits_[i]) * rat_pow(prime_, val_ + static_cast<long>(i));
    }
    return acc;
}

BigRat PAdic::frac_part() const {
    if (zero_ || val_ >= 0) return BigRat(0);
    BigRat acc(0);
    for (long pos = val_; pos < 0; ++pos) {
        long idx = pos - val_;
        if (idx >= static_cast<long>(digits_.size())) break;
        acc += BigRat(digits_[static_cast<size_t>(idx)]) * rat_pow(prime_, pos);
    }
    // reduce into [0,1)
    BigInt num = boost::multiprecision::numerator(acc);
    BigInt den = boost::multiprecision::denominator(acc);
    BigInt m = num % den;
    if (m < 0) m += den;
    return BigRat(m, den);
}

bool PAdic::eq_window(const PAdic& rhs) const {
    if (prime_ != rhs.prime_) return false;
    long end;
    if (exact_ && rhs.exact_) {
        long ea = zero_ ? 0 : val_ + static_cast<long>(digits_.size());
        long eb = rhs.zero_ ? 0 : rhs.val_ + static_cast<long>(rhs.digits_.size());
        end = std::max(ea, eb);
    } else {
        end = std::min(known_end(), rhs.known_end());
    }
    long start = std::min(zero_ ? end : val_, rhs.zero_ ? end : rhs.val_);
    for (long pos = start; pos < end; ++pos) {
        if (digit_at(pos) != rhs.digit_at(pos)) return false;
    }
    return true;
}

std::optional<long> PAdic::diff_valuation(const PAdic& a, const PAdic& b, long stop_at,
                                          long* window_end) {
    if (a.prime_ != b.prime_) throw DomainError("mixed primes in difference");
    const long p = a.prime_;
    long end;
    if (a.exact_ && b.exact_) {
        // the difference is known exactly; one extra position absorbs a borrow
        long ea = a.zero_ ? 0 : a.val_ + static_cast<long>(a.digits_.size());
        long eb = b.zero_ ? 0 : b.val_ + static_cast<long>(b.digits_.size());
        end = std::max(ea, eb) + 1;
        if (window_end) *window_end = LONG_MAX;
    } else {
        end = std::min(a.known_end(), b.known_end());
        if (window_end) *window_end = end;
    }
    long start = LONG_MAX;
    if (!a.zero_) start = a.val_;
    if (!b.zero_) start = std::min(start, b.val_);
    if (start == LONG_MAX) return std::nullopt; // both zero on their windows
    int borrow = 0;
    for (long pos = start; pos < end && pos < stop_at; ++pos) {
        long ia = a.zero_ ? -1 : pos - a.val_;
        long ib = b.zero_ ? -1 : pos - b.val_;
        int da = (ia >= 0 && ia < static_cast<long>(a.digits_.size())) ? a.digits_[static_cast<size_t>(ia)] : 0;
        int db = (ib >= 0 && ib < static_cast<long>(b.digits_.size())) ? b.digits_[static_cast<size_t>(ib)] : 0;
        int d = da - db - borrow;
        if (d < 0) {
            d += static_cast<int>(p);
            borrow = 1;
        } else {
            borrow = 0;
        }
        if (d != 0) return pos;
    }
    return std::nullopt;
}

int PAdic::cmp_exact(const PAdic& a, const PAdic& b) {
    if (a.zero_ != b.zero_) return a.zero_ ? -1 : 1;
    if (a.zero_) return 0;
    if (a.val_ != b.val_) return a.val_ < b.val_ ? -1 : 1;
    if (a.digits_ != b.digits_) return a.digits_ < b.digits_ ? -1 : 1;
    return 0;
}

std::string PAdic::render() const {
    std::ostringstream os;
    if (zero_) {
        if (exact_) return "0 (exact)";
        os << "0 (mod " << prime_ << "^" << val_ << ")";
        return os.str();
    }
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (i) os << " ";
        os << digits_[i];
    }
    os << " * " << prime_ << "^" << val_;
    if (exact_) {
        os << " (exact)";
    } else {
        os << " (mod " << prime_ << "^" << val_ + static_cast<long>(digits_.size()) << ")";
    }
    return os.str();
}

PAdic PAdic::parse(const std::string& text, long p) {
    std::istringstream is(text);
    std::vector<int32_t> digits;
    std::string tok;
    bool saw_star = false;
    long val = 0;
    std::string tail;
    while (is >> tok) {
        if (tok == "*") { saw_star = true; break; }
        if (tok == "0" && digits.empty()) {
            // possibly the zero form
            std::string rest;
            std::getline(is, rest);
            if (rest.find("exact") != std::string::npos) return zero(p);
            auto caret = rest.find('^');
            auto close = rest.find(')');
            if (caret != std::string::npos && close != std::string::npos) {
                long end = std::stol(rest.substr(caret + 1, close - caret - 1));
                return zero_to(p, end);
            }
            throw ParseError("malformed zero rendering: " + text);
        }
        try {
            digits.push_back(static_cast<int32_t>(std::stol(tok)));
        } catch (const std::exception&) {
            throw ParseError("bad digit token '" + tok + "'");
        }
    }
    if (!saw_star) throw ParseError("missing '*' in p-adic rendering: " + text);
    if (!(is >> tok)) throw ParseError("missing base^val: " + text);
    auto caret = tok.find('^');
    if (caret == std::string::npos) throw ParseError("missing '^': " + text);
    long base = std::stol(tok.substr(0, caret));
    if (base != p) throw ParseError("prime mismatch in rendering: " + text);
    val = std::stol(tok.substr(caret + 1));
    std::getline(is, tail);
    bool exact = tail.find("exact") != std::string::npos;
    return PAdic(p, val, std::move(digits), exact);
}

std::optional<long> vec_norm_exp(const std::vector<PAdic>& v) {
    std::optional<long> best;
    for (const PAdic& c : v) {
        auto e = c.norm_exp();
        if (e && (!best || *e > *best)) best = e;
    }
    return best;
}

std::vector<PAdic> vec_add(const std::vector<PAdic>& a, const std::vector<PAdic>& b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    std::vector<PAdic> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

std::vector<PAdic> vec_sub(const std::vector<PAdic>& a, const std::vector<PAdic>& b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    std::vector<PAdic> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

std::vector<PAdic> vec_neg(const std::vector<PAdic>& a) {
    std::vector<PAdic> out;
    out.reserve(a.size());
    for (const PAdic& c : a) out.push_back(-c);
    return out;
}

std::vector<PAdic> origin(long p, int n) {
    return std::vector<PAdic>(static_cast<size_t>(n), PAdic::zero(p));
}

} // namespace nak
