#pragma once

#include <stdexcept>
#include <vector>

#include "starchar/locally_scalar.hpp"
#include "starchar/scalar.hpp"

namespace starchar {

/// Coefficients (a, b) of a character a*u_odd + b*u_even in the basis of the
/// odd/even parts of the special locally-scalar character.
template <class S>
struct ParityPair {
    S odd_coeff;   // a, multiplies u_odd (the part supported on odd vertexes)
    S even_coeff;  // b, multiplies u_even

    friend bool operator==(const ParityPair& x, const ParityPair& y) {
        return x.odd_coeff == y.odd_coeff && x.even_coeff == y.even_coeff;
    }
};

enum class Step { Odd, Even };  // Odd = reflect all odd vertexes, Even = all even

enum class StartPart { OddPart, EvenPart };  // u_odd = (1,0), u_even = (0,1)

/// The four orbit variants of the closed-form proposition. The written-order
/// label: start part, whether a trailing extra step is applied.
///   {OddPart,  false}: (c_odd c_even)^j u_odd          -- "even-last" words
///   {OddPart,  true }: c_even (c_odd c_even)^j u_odd
///   {EvenPart, false}: (c_even c_odd)^j u_even
///   {EvenPart, true }: c_odd (c_even c_odd)^j u_even
struct OrbitVariant {
    StartPart start;
    bool extra_step;
};

template <class S>
ParityPair<S> parity_start(StartPart part, const S& t) {
    if (part == StartPart::OddPart) return {one_like(t), zero_like(t)};
    return {zero_like(t), one_like(t)};
}

/// One simultaneous-reflection step on the coefficient pair, exact at every
/// t including t = 1:
///   Even: (a, b) -> (a, (1+t) a - b)
///   Odd:  (a, b) -> ((1+t^{-1}) b - a, b)
template <class S>
ParityPair<S> parity_step(const ParityPair<S>& p, Step step, const S& t) {
    if (step == Step::Even) return {p.odd_coeff, (one_like(t) + t) * p.odd_coeff - p.even_coeff};
    return {(one_like(t) + inv(t)) * p.even_coeff - p.odd_coeff, p.even_coeff};
}

template <class S>
ParityPair<S> parity_evolution(ParityPair<S> p, const std::vector<Step>& word, const S& t) {
    for (Step s : word) p = parity_step(p, s, t);
    return p;
}

/// Alternating word of the orbit: the first reflection acts on the parity
/// opposite to the start part (reflections at the supported parity only flip
/// sign), so OddPart starts with an Even step and vice versa.
inline std::vector<Step> orbit_word(StartPart part, int steps) {
    if (steps < 0) throw std::invalid_argument("negative step count");
    std::vector<Step> w;
    w.reserve(static_cast<std::size_t>(steps));
    Step s = (part == StartPart::OddPart) ? Step::Even : Step::Odd;
    for (int i = 0; i < steps; ++i) {
        w.push_back(s);
        s = (s == Step::Even) ? Step::Odd : Step::Even;
    }
    return w;
}

inline std::vector<Step> orbit_word(OrbitVariant v, int j) {
    return orbit_word(v.start, 2 * j + (v.extra_step ? 1 : 0));
}

/// Closed forms for the iterated compositions. Away from t = 1 the
/// coefficients are (1 - t^m)/(t^j (1-t)) shapes; at t = 1 the limits
/// (1-t^m)/(1-t) -> m apply. Always equals parity_evolution on the same word.
template <class S>
ParityPair<S> closed_form_iterate(OrbitVariant v, int j, const S& t) {
    if (j < 0) throw std::invalid_argument("negative iteration count");
    const S one = one_like(t);
    // numerator exponents (m_odd, m_even) and an extra factor t on the even side
    int m_odd = 0, m_even = 0;
    bool t_on_even = false;
    int denom_pow = j;
    if (v.start == StartPart::OddPart && !v.extra_step) {
        m_odd = 2 * j + 1; m_even = 2 * j; t_on_even = true;
    } else if (v.start == StartPart::OddPart && v.extra_step) {
        m_odd = 2 * j + 1; m_even = 2 * j + 2;
    } else if (v.start == StartPart::EvenPart && !v.extra_step) {
        m_odd = 2 * j; m_even = 2 * j + 1;
    } else {
        m_odd = 2 * j + 2; m_even = 2 * j + 1; t_on_even = true; denom_pow = j + 1;
    }
    if (is_one(t)) {
        // (1 - t^m)/(1 - t) -> m
        return {from_ratio_like(t, m_odd, 1), from_ratio_like(t, m_even, 1)};
    }
    S denom_inv = inv(scalar_pow(t, denom_pow) * (one - t));
    S a = (one - scalar_pow(t, m_odd)) * denom_inv;
    S b = (one - scalar_pow(t, m_even)) * denom_inv;
    if (t_on_even) b = t * b;
    return {a, b};
}

/// rho_{lambda-2}(n) = 1 + (t - t^n)/(1 - t^{n+1}); at t = 1 the limit
/// 2n/(n+1). Satisfies (rho(n+1))^{-1} = t/(1+t)^2 (lambda + 2 - rho(n)).
template <class S>
S rho(int n, const S& t) {
    if (n < 0) throw std::invalid_argument("negative index");
    if (is_zero(t)) throw std::domain_error("rho undefined at t = 0");
    if (is_one(t)) return from_ratio_like(t, 2L * n, n + 1L);
    const S one = one_like(t);
    return one + (t - scalar_pow(t, n)) * inv(one - scalar_pow(t, n + 1));
}

/// (a, b) -> (1, b/a).
template <class S>
ParityPair<S> normalize(const ParityPair<S>& p) {
    if (is_zero(p.odd_coeff)) throw std::domain_error("cannot normalize: odd coefficient is zero");
    return {one_like(p.odd_coeff), p.even_coeff * inv(p.odd_coeff)};
}

/// Normalized limit of the iterates: (1, 1) means convergence to u_Gamma,
/// (1, t) to the conjugate character u'_Gamma built from t^{-1} (whose odd
/// part equals u_odd and whose even part is t * u_even). For t > 1 the
/// no-extra-step words from the odd part converge to u_Gamma; roles swap for
/// t < 1. Undefined at t = 1.
template <class S>
ParityPair<S> limit_target(OrbitVariant v, const S& t) {
    static_assert(is_exact_scalar_v<S> ? std::is_same_v<S, Rational> : true,
                  "limit_target needs an ordered scalar (Rational or double)");
    if (is_one(t)) throw std::domain_error("no limit dichotomy at t = 1");
    bool t_above_one;
    if constexpr (std::is_same_v<S, Rational>)
        t_above_one = t > 1;
    else
        t_above_one = t > 1.0;
    const bool to_u_gamma = (v.start == StartPart::OddPart) == !v.extra_step;
    if (to_u_gamma == t_above_one) return {one_like(t), one_like(t)};
    return {one_like(t), t};
}

/// a*u_odd + b*u_even as a full locally-scalar character.
template <class S>
LSCharacter<S> assemble(const ParityPair<S>& p, const LSCharacter<S>& u_odd, const LSCharacter<S>& u_even) {
    return ls_add(ls_scale(u_odd, p.odd_coeff), ls_scale(u_even, p.even_coeff));
}

/// w_p = u_odd + S_p(t)/S_{p-1}(t) u_even, the family whose chi_p components
/// are positive and strictly increasing along branches for p >= max k_l, with
/// (chi_k)_k = 1 on maximal branches at p = k. Requires t^{p-1} != 1, which
/// rules out the degenerate p = 1 case.
template <class S>
LSCharacter<S> w_character(const StarGraph& g, const S& t, int p, double tol = 1e-8) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (is_one(scalar_pow(t, p - 1)) || is_one(scalar_pow(t, p)))
        throw std::domain_error("degenerate w_p coefficient at p = " + std::to_string(p));
    LSCharacter<S> u = special_ls_character(g, t, tol);
    auto [u_odd, u_even] = decompose(u);
    S coeff = power_sum(t, p) * inv(power_sum(t, p - 1));
    return ls_add(u_odd, ls_scale(u_even, coeff));
}

/// The character chi_p corresponding to w_p; for p >= max k_l its components
/// are positive and strictly increasing along every branch.
template <class S>
Character<S> chi_p_character(const StarGraph& g, const S& t, int p, double tol = 1e-8) {
    return u_to_chi(w_character(g, t, p, tol));
}

}  // namespace starchar
