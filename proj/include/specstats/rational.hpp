#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace specstats {

// Exact coefficient field used by every identity-checking code path.
// cpp_rational keeps values reduced with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int int_factorial(int n);
Int int_pow(const Int& base, int exp);
Rational rational_pow(const Rational& base, int exp);

double to_double(const Rational& q);

// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

struct ParsedScalar {
    Rational value;
    // true for integer or p/q tokens; false for decimal / scientific literals
    // (still parsed exactly, but they signal float-valued input).
    bool exact_form = true;
};

// Accepts: [+-]digits, [+-]p/q, decimal ("1.25"), scientific ("-3.5e-2").
std::optional<ParsedScalar> parse_scalar(std::string_view token);

}  // namespace specstats
