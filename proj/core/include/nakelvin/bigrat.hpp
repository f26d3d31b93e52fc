#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nak {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// p^e for any integer e, as an exact rational.
inline BigRat rat_pow(long base, long exp) {
    BigInt b(base);
    if (exp >= 0) {
        return BigRat(boost::multiprecision::pow(b, static_cast<unsigned>(exp)));
    }
    return BigRat(BigInt(1), boost::multiprecision::pow(b, static_cast<unsigned>(-exp)));
}

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

inline long double to_long_double(const BigRat& r) { return r.convert_to<long double>(); }

inline std::string to_string(const BigRat& r) { return r.str(); }

} // namespace nak
