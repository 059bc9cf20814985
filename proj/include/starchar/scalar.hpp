#pragma once

#include <cmath>
#include <cstdlib>
#include <type_traits>

#include "starchar/rational.hpp"

namespace starchar {

// Generic scalar layer. Character and orbit code is templated over a scalar
// type S that is Rational, double, or NFElem. Constants are always minted
// from an existing value ("model") so field elements know their field.

template <class S>
inline constexpr bool is_exact_scalar_v = !std::is_floating_point_v<S>;

inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }
inline double from_rational_like(double, const Rational& q) { return to_double(q); }
inline double from_ratio_like(double, long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
inline double inv(double x) { return 1.0 / x; }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_one(double x) { return x == 1.0; }
inline double approx_magnitude(double x) { return std::abs(x); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_rational_like(const Rational&, const Rational& q) { return q; }
inline Rational from_ratio_like(const Rational&, long num, long den) { return make_rational(num, den); }
inline Rational inv(const Rational& x) {
    if (x == 0) throw std::domain_error("division by zero");
    return Rational(1) / x;
}
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_one(const Rational& x) { return x == 1; }
/// Zero iff the value is exactly zero; used only for residual reporting.
inline double approx_magnitude(const Rational& x) { return std::abs(to_double(x)); }

template <class S>
S scalar_pow(const S& base, int n) {
    if (n < 0) return inv(scalar_pow(base, -n));
    S r = one_like(base);
    S b = base;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

/// Truncated geometric sum S_k(t) = 1 + t + ... + t^k; S_{-1} = 0.
template <class S>
S power_sum(const S& t, int k) {
    S acc = zero_like(t);
    S p = one_like(t);
    for (int i = 0; i <= k; ++i) {
        acc = acc + p;
        if (i < k) p = p * t;
    }
    return acc;
}

}  // namespace starchar
