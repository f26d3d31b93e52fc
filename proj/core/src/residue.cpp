#include "nakelvin/residue.hpp"

#include <sstream>

namespace nak {

namespace {

long modn(long a, long p) { return ((a % p) + p) % p; }

long scalar_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = modn(a, p);
    if (nr == 0) throw DivisionByZeroError("inverse of 0 mod p");
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw DomainError("not invertible mod p");
    return modn(t, p);
}

} // namespace

FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool fp_is_zero(const FpPoly& a) {
    for (long c : a)
        if (c != 0) return false;
    return true;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        out[i] = modn(v, p);
    }
    return fp_trim(std::move(out));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        out[i] = modn(v, p);
    }
    return fp_trim(std::move(out));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (fp_is_zero(a) || fp_is_zero(b)) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = modn(out[i + j] + a[i] * b[j], p);
        }
    }
    return fp_trim(std::move(out));
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, long p) {
    a = fp_trim(std::move(a));
    FpPoly mm = fp_trim(m);
    if (mm.empty()) throw DivisionByZeroError("polynomial mod 0");
    long lead_inv = scalar_inv(mm.back(), p);
    while (a.size() >= mm.size()) {
        long c = modn(a.back() * lead_inv, p);
        size_t shift = a.size() - mm.size();
        if (c != 0) {
            for (size_t i = 0; i < mm.size(); ++i) {
                a[shift + i] = modn(a[shift + i] - c * mm[i], p);
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = scalar_inv(a.back(), p);
        for (long& c : a) c = modn(c * inv, p);
    }
    return a;
}

FpPoly fp_powmod(const FpPoly& base, long long e, const FpPoly& m, long p) {
    FpPoly result{1};
    FpPoly b = fp_mod(base, m, p);
    while (e > 0) {
        if (e & 1) result = fp_mod(fp_mul(result, b, p), m, p);
        b = fp_mod(fp_mul(b, b, p), m, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_invmod(const FpPoly& a, const FpPoly& m, long p) {
    FpPoly r0 = fp_trim(m), r1 = fp_mod(a, m, p);
    if (r1.empty()) throw DivisionByZeroError("inverse of zero residue");
    FpPoly t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        FpPoly q;
        FpPoly rem = r0;
        long lead_inv = scalar_inv(r1.back(), p);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long c = modn(rem.back() * lead_inv, p);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) {
                rem[shift + i] = modn(rem[shift + i] - c * r1[i], p);
            }
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw DomainError("residue not invertible (gcd has positive degree)");
    long inv = scalar_inv(r0[0], p);
    FpPoly out = t0;
    for (long& c : out) c = modn(c * inv, p);
    return fp_mod(out, m, p);
}

bool fp_is_irreducible(const FpPoly& f, long p) {
    FpPoly ff = fp_trim(f);
    if (ff.size() < 2) return false;
    int n = static_cast<int>(ff.size()) - 1;
    FpPoly t{0, 1};
    // t^(p^n) == t mod f
    FpPoly frob = t;
    for (int i = 0; i < n; ++i) frob = fp_powmod(frob, p, ff, p);
    if (fp_trim(fp_sub(frob, t, p)) != FpPoly{}) return false;
    // gcd(t^(p^(n/d)) - t, f) == 1 for every prime divisor d of n
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        bool is_pr = true;
        for (int k = 2; k * k <= d; ++k)
            if (d % k == 0) { is_pr = false; break; }
        if (!is_pr) continue;
        FpPoly fr = t;
        for (int i = 0; i < n / d; ++i) fr = fp_powmod(fr, p, ff, p);
        FpPoly g = fp_gcd(fp_sub(fr, t, p), ff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FpPoly find_irreducible(long p, int n) {
    if (n < 1) throw DomainError("degree must be >= 1");
    // candidates: t^n + sum c_i t^i, ordered by the integer sum c_i p^i
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (long long code = 0; code < total; ++code) {
        FpPoly f(static_cast<size_t>(n) + 1, 0);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            f[static_cast<size_t>(i)] = static_cast<long>(c % p);
            c /= p;
        }
        f[static_cast<size_t>(n)] = 1;
        if (fp_is_irreducible(f, p)) return f;
    }
    throw DomainError("no irreducible polynomial found"); // unreachable
}

std::string fp_poly_to_string(const FpPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f[i];
        } else {
            if (f[i] != 1) os << f[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

FpPoly fp_poly_parse(const std::string& text) {
    FpPoly out;
    size_t pos = 0;
    auto set_coeff = [&out](size_t deg, long val) {
        if (out.size() <= deg) out.resize(deg + 1, 0);
        out[deg] += val;
    };
    while (pos < text.size()) {
        if (text[pos] == '+' || text[pos] == ' ') { ++pos; continue; }
        long coeff = 1;
        size_t deg = 0;
        bool saw_num = false;
        size_t start = pos;
        while (pos < text.size() && isdigit(text[pos])) ++pos;
        if (pos > start) {
            coeff = std::stol(text.substr(start, pos - start));
            saw_num = true;
        }
        if (pos < text.size() && text[pos] == '*') ++pos;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < text.size() && isdigit(text[pos])) ++pos;
                if (pos == start) throw ParseError("missing exponent in " + text);
                deg = static_cast<size_t>(std::stol(text.substr(start, pos - start)));
            }
        } else if (!saw_num) {
            throw ParseError("bad polynomial term in " + text);
        }
        set_coeff(deg, coeff);
    }
    return fp_trim(std::move(out));
}

ResidueElement::ResidueElement(long p, FpPoly modulus, FpPoly coeffs)
    : p_(p), modulus_(fp_trim(std::move(modulus))), coeffs_(fp_mod(std::move(coeffs), modulus_, p)) {}

ResidueElement ResidueElement::mul(const ResidueElement& rhs) const {
    if (p_ != rhs.p_ || modulus_ != rhs.modulus_) throw DomainError("mixed residue fields");
    return ResidueElement(p_, modulus_, fp_mul(coeffs_, rhs.coeffs_, p_));
}

ResidueElement ResidueElement::invert() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero residue element");
    return ResidueElement(p_, modulus_, fp_invmod(coeffs_, modulus_, p_));
}

} // namespace nak
