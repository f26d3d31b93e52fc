#pragma once

#include "nakelvin/schwartz.hpp"

#include <string>

namespace nak {

// JSON form of a test function: a context header {p, n} plus a list of
// {center, radius_exp, coeff} terms; centers as exact digit windows.
// Rational-function coefficients serialize to their canonical strings,
// complex ones to [re, im] pairs.
std::string testfunction_to_json(const TestFunction<SymbolicScalar>& f);
std::string testfunction_to_json(const TestFunction<std::complex<double>>& f);

TestFunction<SymbolicScalar> testfunction_from_json_exact(const std::string& text);
TestFunction<std::complex<double>> testfunction_from_json_numeric(const std::string& text);

} // namespace nak
