#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starchar/polynomial.hpp"
#include "starchar/rational.hpp"

namespace starchar {

/// Raised when inverting an element that shares a factor with a squarefree
/// but reducible modulus. Carries the discovered factor so the caller can
/// refine the modulus to the irreducible factor containing the intended root.
struct NonInvertibleError : std::domain_error {
    explicit NonInvertibleError(RatPoly factor)
        : std::domain_error("element is not invertible; modulus shares factor " + factor.to_string()),
          common_factor(std::move(factor)) {}
    RatPoly common_factor;
};

/// Q[t]/(m) for a monic squarefree modulus m. Immutable; elements keep a
/// shared handle to their field.
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(RatPoly modulus) {
        if (modulus.degree() < 1) throw std::invalid_argument("modulus must be nonconstant");
        modulus = modulus.monic();
        RatPoly g = poly_gcd(modulus, modulus.derivative());
        if (g.degree() != 0) throw std::invalid_argument("modulus must be squarefree");
        return std::shared_ptr<const NumberField>(new NumberField(std::move(modulus)));
    }

    const RatPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

private:
    explicit NumberField(RatPoly m) : modulus_(std::move(m)) {}
    RatPoly modulus_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
public:
    NFElem() = default;  // unusable placeholder for containers

    NFElem(NumberFieldPtr field, RatPoly representative) : field_(std::move(field)) {
        rep_ = std::move(representative);
        if (rep_.degree() >= field_->degree()) rep_ = rep_ % field_->modulus();
        coeffs_from_rep();
    }

    static NFElem from_rational(const NumberFieldPtr& field, const Rational& q) {
        return NFElem(field, RatPoly::constant(q));
    }
    /// The class of t itself.
    static NFElem generator(const NumberFieldPtr& field) { return NFElem(field, RatPoly::x()); }

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const RatPoly& representative() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return NFElem(a.field_, a.rep_ + b.rep_);
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return NFElem(a.field_, a.rep_ - b.rep_);
    }
    NFElem operator-() const { return NFElem(field_, -rep_); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return NFElem(a.field_, (a.rep_ * b.rep_) % a.field_->modulus());
    }
    friend NFElem operator*(const Rational& s, const NFElem& a) { return NFElem(a.field_, s * a.rep_); }

    /// Extended Euclid against the modulus. Throws NonInvertibleError with
    /// the common factor when gcd(rep, modulus) is nonconstant.
    NFElem inverse() const {
        if (rep_.is_zero()) throw NonInvertibleError(field_->modulus());
        // r0 = modulus, r1 = rep; track only the cofactor of rep.
        RatPoly r0 = field_->modulus(), r1 = rep_;
        RatPoly t0 = RatPoly::zero(), t1 = RatPoly::constant(Rational(1));
        while (!r1.is_zero()) {
            auto [q, r2] = RatPoly::divmod(r0, r1);
            RatPoly t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.degree() != 0) throw NonInvertibleError(r0.monic());
        return NFElem(field_, (Rational(1) / r0.coeff(0)) * t0);
    }

    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

private:
    void check_same(const NFElem& other) const {
        if (!field_ || !other.field_) throw std::logic_error("uninitialized number field element");
        if (field_ != other.field_ && field_->modulus() != other.field_->modulus())
            throw std::invalid_argument("number field elements from different fields");
    }
    void coeffs_from_rep() {
        coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
        for (int i = 0; i <= rep_.degree(); ++i) coeffs_[static_cast<std::size_t>(i)] = rep_.coeff(i);
    }

    NumberFieldPtr field_;
    RatPoly rep_;
    std::vector<Rational> coeffs_;
};

// scalar layer hooks (see scalar.hpp)
inline NFElem zero_like(const NFElem& x) { return NFElem::from_rational(x.field(), Rational(0)); }
inline NFElem one_like(const NFElem& x) { return NFElem::from_rational(x.field(), Rational(1)); }
inline NFElem from_rational_like(const NFElem& x, const Rational& q) { return NFElem::from_rational(x.field(), q); }
inline NFElem from_ratio_like(const NFElem& x, long num, long den) {
    return NFElem::from_rational(x.field(), make_rational(num, den));
}
inline NFElem inv(const NFElem& x) { return x.inverse(); }
inline bool is_zero(const NFElem& x) { return x.is_zero(); }
inline bool is_one(const NFElem& x) { return x == one_like(x); }
inline double approx_magnitude(const NFElem& x) {
    double m = 0;
    for (const auto& c : x.coeffs()) m = std::max(m, std::abs(to_double(c)));
    return m;
}

}  // namespace starchar
