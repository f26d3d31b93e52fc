#pragma once

#include "nakelvin/padic.hpp"
#include "nakelvin/symbolic.hpp"

#include <string>
#include <vector>

namespace nak {

// Verification suites behind the `verify` CLI subcommand. Each suite runs a
// deterministic family of checks from the seed and reports one record per
// check; the exit-status contract is pass-all-or-nonzero.

struct SuiteConfig {
    long p = 2;
    int n = 2;
    std::vector<double> alphas; // empty: suite-specific defaults
    int precision = kDefaultPrecision;
    unsigned long long seed = 1;
};

struct CheckRecord {
    std::string id;
    std::string inputs;             // compact digest of the inputs
    std::string symbolic_residual;  // canonical rational-function string, "-" if numeric-only
    std::vector<std::pair<double, double>> numeric_residuals; // (alpha, |residual|)
    double oracle_agreement = 0.0;  // max |symbolic value - shell-sum oracle|
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::string context; // "p=..;n=..;modulus=..."
    long p = 2;
    int n = 2;
    int precision = kDefaultPrecision;
    std::vector<double> alphas;
    unsigned long long seed = 1;
    std::string constant_c;         // adopted D^{alpha,n} constant
    std::string constant_c_printed; // the constant as printed under Eq. (1-3)
    std::string constant_dl;        // Eq. (2-1) constant, adopted as printed
    std::string constant_d;         // Riesz constant d_{n,gamma}
    std::string dl_resolution;      // outcome of the normalization question
    std::vector<CheckRecord> checks;
    double wall_ms = 0.0;

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    bool all_pass() const { return passed() == total(); }
};

inline const char* const kSuiteNames[] = {"kelvin",    "chain", "inverse",   "fourier",
                                          "eigen",     "harmonic", "arithmetic"};

// Runs one suite; throws DomainError on an invalid configuration.
VerificationReport run_suite(const std::string& suite, const SuiteConfig& cfg);

std::string report_json(const VerificationReport& r);
std::string report_csv(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

// Structural validation against the documented report schema
// (docs/report-schema.json); throws ParseError on violations.
void validate_report_json(const std::string& json_text);

} // namespace nak
