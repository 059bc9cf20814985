#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starchar/rational.hpp"
#include "starchar/scalar.hpp"

namespace starchar {

/// Univariate polynomial over the rationals, dense ascending coefficients.
/// Invariant: the coefficient vector is empty (zero polynomial) or its last
/// entry is nonzero.
class RatPoly {
public:
    RatPoly() = default;

    /// Ascending coefficients: {c0, c1, ...} = c0 + c1 t + ...
    RatPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

    explicit RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(Rational v) { return RatPoly({std::move(v)}); }
    static RatPoly x() { return RatPoly({Rational(0), Rational(1)}); }

    static RatPoly monomial(int deg, Rational coef) {
        if (deg < 0) throw std::invalid_argument("negative degree");
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        c.back() = std::move(coef);
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return RatPoly(std::move(c));
    }
    RatPoly operator-() const {
        std::vector<Rational> c(c_);
        for (auto& v : c) v = -v;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const Rational& s, const RatPoly& a) {
        if (s == 0) return RatPoly();
        std::vector<Rational> c(a.c_);
        for (auto& v : c) v *= s;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const Rational& s) { return s * a; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        RatPoly r = a;
        std::vector<Rational> q;
        if (a.degree() >= b.degree()) q.resize(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        const Rational& lead = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rational f = r.leading() / lead;
            q[static_cast<std::size_t>(shift)] = f;
            // r -= f * t^shift * b, done in place
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        return {RatPoly(std::move(q)), std::move(r)};
    }

    friend RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
    friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(Integer(i)) * c_[i];
        return RatPoly(std::move(c));
    }

    RatPoly monic() const {
        if (is_zero()) throw std::domain_error("zero polynomial cannot be made monic");
        return (Rational(1) / leading()) * *this;
    }

    /// Horner evaluation at a generic scalar (Rational, double, field element).
    template <class S>
    S eval(const S& t) const {
        S acc = zero_like(t);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + from_rational_like(t, *it);
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational c = coeff(i);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = abs(c);
            if (a != 1 || i == 0) os << a;
            if (i > 0) {
                if (a != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// p / gcd(p, p'), monic: same roots as p, all simple.
inline RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return RatPoly::constant(Rational(1));
    RatPoly g = poly_gcd(p, p.derivative());
    return (p / g).monic();
}

inline RatPoly poly_pow(const RatPoly& base, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    RatPoly r = RatPoly::constant(Rational(1));
    RatPoly b = base;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

}  // namespace starchar
