#pragma once

#include "nakelvin/bigrat.hpp"
#include "nakelvin/errors.hpp"

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nak {

inline constexpr int kDefaultPrecision = 32;

bool is_prime(long p);

// A p-adic number at fixed relative precision.
//
// Nonzero values are  x = sum_i d[i] * p^(val+i)  with d[0] != 0 and all
// digits in [0, p-1]. `exact` means every digit beyond the stored window is
// zero (finite expansion); otherwise nothing is known past the window.
// Zero carries no digits: either genuinely zero (`exact`) or "zero to the
// known window", meaning |x| <= p^(-zero_end).
//
// |x|_K = p^(-val), |0|_K = 0. Values are immutable after construction.
class PAdic {
public:
    // Exact zero.
    static PAdic zero(long p);

    // Zero known only up to p^(-end): |x| <= p^(-end).
    static PAdic zero_to(long p, long end);

    // p-adic expansion of num/den to `precision` significant digits.
    static PAdic from_rational(const BigInt& num, const BigInt& den, long p,
                               int precision = kDefaultPrecision);
    static PAdic from_int(long value, long p, int precision = kDefaultPrecision);

    // Raw constructor; validates digit range and the leading-digit invariant.
    PAdic(long p, long val, std::vector<int32_t> digits, bool exact);

    long prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    bool is_exact() const { return exact_; }
    bool is_exact_zero() const { return zero_ && exact_; }
    long valuation() const;             // throws DomainError on zero
    int precision() const;              // digit count of the stored window

    // First position past which digits are unknown; LONG_MAX when exact.
    long known_end() const;

    // Digit at absolute position pos; throws PrecisionError past the window.
    int digit_at(long pos) const;

    // exponent e with |x| = p^e, i.e. e = -valuation; nullopt for zero.
    std::optional<long> norm_exp() const;

    PAdic operator-() const;
    PAdic operator+(const PAdic& rhs) const;
    PAdic operator-(const PAdic& rhs) const;
    PAdic operator*(const PAdic& rhs) const;

    PAdic mul_int(long k) const;        // multiply by a small integer
    PAdic invert() const;               // throws DivisionByZeroError on zero
    PAdic shift(long k) const;          // multiply by p^k

    // Canonical residue modulo p^r: digits at positions >= r dropped,
    // trailing zeros stripped, result exact. Throws PrecisionError if the
    // window does not reach position r.
    PAdic reduce_mod(long r) const;

    // True iff p^r divides x, decided from the known window.
    // Throws PrecisionError when undecidable.
    bool divisible_by_pow(long r) const;

    // Exact rational value of a finite expansion.
    BigRat to_rational() const;

    // Fractional part {x}_p in [0,1): the terms with negative exponent.
    BigRat frac_part() const;

    // Equality over the common precision window (the decidable notion).
    bool eq_window(const PAdic& rhs) const;

    // Valuation of a - b computed by streaming subtraction, no allocation.
    // Returns the valuation, or nullopt when the difference vanishes over
    // the whole decidable window; *window_end receives that window's end.
    // Positions at or past stop_at are not inspected (pass LONG_MAX for
    // the full window).
    static std::optional<long> diff_valuation(const PAdic& a, const PAdic& b, long stop_at,
                                              long* window_end);

    // Total order on exact values, for use as map keys.
    static int cmp_exact(const PAdic& a, const PAdic& b);

    // "d0 d1 ... * p^v (mod p^(v+N))", "... (exact)", "0 (exact)".
    std::string render() const;
    static PAdic parse(const std::string& text, long p);

private:
    PAdic() = default;
    void normalize();

    long prime_ = 2;
    bool zero_ = true;
    bool exact_ = true;
    long val_ = 0;                 // for zero: the known-end bound
    std::vector<int32_t> digits_;
};

inline bool operator==(const PAdic& a, const PAdic& b) { return a.eq_window(b); }

// p-adic valuation of a nonzero integer.
long int_valuation(const BigInt& v, long p);

// ||v|| of a coordinate vector: exponent e with max_j |v_j| = p^e.
std::optional<long> vec_norm_exp(const std::vector<PAdic>& v);

// coordinatewise vector helpers on K^n points
std::vector<PAdic> vec_add(const std::vector<PAdic>& a, const std::vector<PAdic>& b);
std::vector<PAdic> vec_sub(const std::vector<PAdic>& a, const std::vector<PAdic>& b);
std::vector<PAdic> vec_neg(const std::vector<PAdic>& a);
std::vector<PAdic> origin(long p, int n);


} // namespace nak
