#include "specstats/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace specstats {

Int int_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Int int_pow(const Int& base, int exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("rational_pow: 0 to negative power");
        return 1 / rational_pow(base, -exp);
    }
    Rational r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_fraction_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Int> parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
}

}  // namespace

std::optional<ParsedScalar> parse_scalar(std::string_view token) {
    if (token.empty()) return std::nullopt;

    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        auto num = parse_int(token.substr(0, slash));
        auto den = parse_int(token.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        if (*den < 0) {  // the rational ctor requires a positive denominator
            *num = -*num;
            *den = -*den;
        }
        return ParsedScalar{Rational(*num, *den), true};
    }

    if (auto v = parse_int(token)) return ParsedScalar{Rational(*v), true};

    // decimal / scientific literal, parsed exactly
    std::string_view s = token;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string_view mantissa = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto expint = parse_int(s.substr(e + 1));
        if (!expint || *expint > 7000 || *expint < -7000) return std::nullopt;
        exp10 = expint->convert_to<long>();
        mantissa = s.substr(0, e);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        auto intpart = mantissa.substr(0, dot);
        auto fracpart = mantissa.substr(dot + 1);
        if (intpart.empty() && fracpart.empty()) return std::nullopt;
        if (!intpart.empty() && !all_digits(intpart)) return std::nullopt;
        if (!fracpart.empty() && !all_digits(fracpart)) return std::nullopt;
        digits = std::string(intpart) + std::string(fracpart);
        frac_digits = static_cast<long>(fracpart.size());
    } else {
        if (!all_digits(mantissa)) return std::nullopt;
        digits = std::string(mantissa);
    }
    if (digits.empty()) return std::nullopt;
    Int num(digits);
    if (neg) num = -num;
    long e = exp10 - frac_digits;
    Rational v(num);
    if (e > 0)
        v *= Rational(int_pow(Int(10), static_cast<int>(e)));
    else if (e < 0)
        v /= Rational(int_pow(Int(10), static_cast<int>(-e)));
    return ParsedScalar{v, false};
}

}  // namespace specstats
