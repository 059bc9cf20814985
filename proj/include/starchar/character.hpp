#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "starchar/number_field.hpp"
#include "starchar/scalar.hpp"
#include "starchar/star_graph.hpp"

namespace starchar {

/// Character on a star graph: per-branch values alpha_1..alpha_{k_l} listed
/// from the non-root extreme point, plus the root value lambda. alpha_0 is
/// implicitly 0. Scalar type S is Rational, double, or NFElem.
template <class S>
struct Character {
    StarGraph graph;
    std::vector<std::vector<S>> alphas;  // alphas[l][j-1] = alpha_j on branch l
    S lambda;

    const S& alpha(int l, int j) const { return alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - 1)]; }
    S& alpha(int l, int j) { return alphas[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - 1)]; }

    friend bool operator==(const Character& a, const Character& b) {
        return a.graph == b.graph && a.alphas == b.alphas && a.lambda == b.lambda;
    }
};

template <class S>
Character<S> make_character(const StarGraph& g, std::vector<std::vector<S>> alphas, S lambda) {
    if (static_cast<int>(alphas.size()) != g.branch_count()) throw std::invalid_argument("branch count mismatch");
    for (int l = 0; l < g.branch_count(); ++l)
        if (static_cast<int>(alphas[static_cast<std::size_t>(l)].size()) != g.branch_length(l))
            throw std::invalid_argument("alpha list length mismatch on branch " + std::to_string(l));
    return Character<S>{g, std::move(alphas), std::move(lambda)};
}

/// Largest componentwise deviation between two characters on the same graph,
/// as a double. Zero for exact scalars iff the characters are equal.
template <class S>
double residual_norm(const Character<S>& a, const Character<S>& b) {
    if (a.graph != b.graph) throw std::invalid_argument("characters on different graphs");
    double m = approx_magnitude(a.lambda - b.lambda);
    for (std::size_t l = 0; l < a.alphas.size(); ++l)
        for (std::size_t j = 0; j < a.alphas[l].size(); ++j)
            m = std::max(m, approx_magnitude(a.alphas[l][j] - b.alphas[l][j]));
    return m;
}

template <class S>
Character<S> scale(const Character<S>& chi, const S& c) {
    Character<S> out = chi;
    out.lambda = out.lambda * c;
    for (auto& branch : out.alphas)
        for (auto& v : branch) v = v * c;
    return out;
}

/// Does t solve the graph equation? Exact scalars evaluate P(t) == 0; the
/// floating path checks |F(t)| < tol.
template <class S>
bool is_graph_equation_solution(const StarGraph& g, const S& t, double tol = 1e-8) {
    if constexpr (is_exact_scalar_v<S>) {
        return is_zero(graph_equation_poly(g).eval(t));
    } else {
        double acc = static_cast<double>(g.branch_count() - 1) - t;
        for (int k : g.branch_lengths()) acc -= 1.0 / power_sum(t, k);
        return std::abs(acc) < tol;
    }
}

/// The special character: alpha_j = S_{j-1}(t) / S_{k_l}(t), lambda = 1,
/// defined whenever t solves the graph equation.
template <class S>
Character<S> special_character(const StarGraph& g, const S& t, double tol = 1e-8) {
    if (!is_graph_equation_solution(g, t, tol))
        throw std::domain_error("t is not a solution of the graph equation for " + g.to_string());
    std::vector<std::vector<S>> alphas;
    alphas.reserve(static_cast<std::size_t>(g.branch_count()));
    for (int l = 0; l < g.branch_count(); ++l) {
        const int k = g.branch_length(l);
        S denom_inv = inv(power_sum(t, k));
        std::vector<S> branch;
        branch.reserve(static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) branch.push_back(power_sum(t, j - 1) * denom_inv);
        alphas.push_back(std::move(branch));
    }
    return Character<S>{g, std::move(alphas), one_like(t)};
}

/// Reflection functor S on characters:
/// alpha'_j = alpha_{k_l} - alpha_{k_l - j}, lambda' = sum_l alpha_{k_l} - lambda.
template <class S>
Character<S> reflect_S(const Character<S>& chi) {
    Character<S> out = chi;
    S highest_sum = zero_like(chi.lambda);
    for (int l = 0; l < chi.graph.branch_count(); ++l) {
        const int k = chi.graph.branch_length(l);
        const S& top = chi.alpha(l, k);
        highest_sum = highest_sum + top;
        for (int j = 1; j <= k; ++j)
            out.alpha(l, j) = (j == k) ? top : top - chi.alpha(l, k - j);
    }
    out.lambda = highest_sum - chi.lambda;
    return out;
}

/// Reflection functor T on characters:
/// alpha''_j = lambda - alpha_{k_l + 1 - j}, lambda'' = lambda.
template <class S>
Character<S> reflect_T(const Character<S>& chi) {
    Character<S> out = chi;
    for (int l = 0; l < chi.graph.branch_count(); ++l) {
        const int k = chi.graph.branch_length(l);
        for (int j = 1; j <= k; ++j) out.alpha(l, j) = chi.lambda - chi.alpha(l, k + 1 - j);
    }
    return out;
}

/// The quadratic form
/// gamma = sum alpha_j^2 + lambda^2 - sum_{k_l>1} alpha_j alpha_{j+1} - lambda sum alpha_{k_l}.
template <class S>
S gamma_form(const Character<S>& chi) {
    S acc = chi.lambda * chi.lambda;
    S highest_sum = zero_like(chi.lambda);
    for (int l = 0; l < chi.graph.branch_count(); ++l) {
        const int k = chi.graph.branch_length(l);
        for (int j = 1; j <= k; ++j) acc = acc + chi.alpha(l, j) * chi.alpha(l, j);
        for (int j = 1; j < k; ++j) acc = acc - chi.alpha(l, j) * chi.alpha(l, j + 1);
        highest_sum = highest_sum + chi.alpha(l, k);
    }
    return acc - chi.lambda * highest_sum;
}

/// (TS) chi_Gamma = t^{-1} chi_Gamma, checked componentwise.
template <class S>
bool verify_ts_eigen(const StarGraph& g, const S& t, double tol = 0.0) {
    Character<S> chi = special_character(g, t, tol > 0 ? tol : 1e-8);
    Character<S> lhs = reflect_T(reflect_S(chi));
    Character<S> rhs = scale(chi, inv(t));
    if constexpr (is_exact_scalar_v<S>)
        return lhs == rhs;
    else
        return residual_norm(lhs, rhs) <= tol;
}

/// sum_l alpha_{k_l} = 1 + 1/t for the special character.
template <class S>
bool identity_sum_highest(const StarGraph& g, const S& t, double tol = 0.0) {
    if (is_zero(t)) throw std::domain_error("t must be nonzero");
    Character<S> chi = special_character(g, t, tol > 0 ? tol : 1e-8);
    S lhs = zero_like(t);
    for (int l = 0; l < g.branch_count(); ++l) lhs = lhs + chi.alpha(l, g.branch_length(l));
    S rhs = one_like(t) + inv(t);
    if constexpr (is_exact_scalar_v<S>)
        return is_zero(lhs - rhs);
    else
        return approx_magnitude(lhs - rhs) <= tol;
}

}  // namespace starchar
