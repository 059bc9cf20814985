#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace starchar {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form by the backend:
/// gcd(|num|, den) == 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(Integer(num), Integer(den));
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parses a decimal string exactly: [+-]digits[.digits][(e|E)[+-]digits].
/// "1e-12" -> 1/10^12, "2.5" -> 5/2. No binary rounding anywhere.
inline Rational parse_decimal(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("not a decimal number: '" + std::string(s) + "'"); };
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_len = 0;
    bool saw_digit = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) { digits += s[i]; saw_digit = true; }
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) { digits += s[i]; ++frac_len; saw_digit = true; }
    }
    if (!saw_digit) fail();
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i == s.size()) fail();
        long e = 0;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
            e = e * 10 + (s[i] - '0');
            if (e > 100000) fail();
        }
        exp10 = eneg ? -e : e;
    }
    if (i != s.size()) fail();

    Integer mant = 0;
    for (char c : digits) mant = mant * 10 + (c - '0');
    if (neg) mant = -mant;
    long net = exp10 - frac_len;
    Integer num = mant, den = 1;
    if (net >= 0)
        num *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(net));
    else
        den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-net));
    return Rational(num, den);
}

/// Exact decimal rendering for rationals whose denominator is 2^a * 5^b
/// (integers, dyadic bisection endpoints, parsed precisions). Anything else
/// would need infinitely many digits and throws.
inline std::string to_decimal_string(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);
    unsigned a = 0, b = 0;
    Integer d = den;
    while (d % 2 == 0) { d /= 2; ++a; }
    while (d % 5 == 0) { d /= 5; ++b; }
    if (d != 1) throw std::domain_error("rational has no finite decimal expansion");
    // Scale to denominator 10^max(a,b).
    unsigned k = a > b ? a : b;
    num *= boost::multiprecision::pow(Integer(2), k - a);
    num *= boost::multiprecision::pow(Integer(5), k - b);
    bool neg = num < 0;
    std::string s = boost::multiprecision::abs(num).convert_to<std::string>();
    if (k > 0) {
        if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
        s.insert(s.size() - k, ".");
    }
    return neg ? "-" + s : s;
}

}  // namespace starchar
