#pragma once

#include <stdexcept>
#include <string>

namespace nak {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument: non-prime p, mismatched primes/contexts, bad dimension.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Inversion of zero (in K, in L, or of the origin of K^n).
struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// A digit window too short to decide a predicate exactly. Never guessed over.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// A shell sum with no convergence region (or evaluation outside it).
struct DivergenceError : Error {
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// Refinement/enumeration guard tripped (e.g. sub-ball explosion).
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// A caller-visible precondition failed (e.g. support touching the origin).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input (p-adic renderings, rational functions, JSON).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace nak
