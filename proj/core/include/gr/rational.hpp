#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gr {

/// Arbitrary precision rational; all L1/Linf pipelines stay exact with it.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "7", "3/4", "0.125", "1e-3" style input. Decimals are converted
/// exactly (0.1 == 1/10), never through a binary double.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

Rational abs_diff(const Rational& a, const Rational& b);

}  // namespace gr
