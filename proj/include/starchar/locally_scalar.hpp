#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "starchar/character.hpp"
#include "starchar/scalar.hpp"
#include "starchar/star_graph.hpp"

namespace starchar {

/// Vertex of a star graph: position j on branch l (1 = extreme non-root end,
/// k_l = adjacent to the root), or the root itself.
struct VertexId {
    int branch = -1;  // -1 encodes the root
    int pos = 0;

    static VertexId root() { return VertexId{}; }
    static VertexId on_branch(int l, int j) { return VertexId{l, j}; }
    bool is_root() const { return branch < 0; }

    friend bool operator==(const VertexId& a, const VertexId& b) { return a.branch == b.branch && a.pos == b.pos; }
};

/// Parity convention: a vertex is odd iff its distance to the root is even;
/// the root itself is odd.
inline bool vertex_is_odd(const StarGraph& g, const VertexId& v) {
    if (v.is_root()) return true;
    const int dist = g.branch_length(v.branch) + 1 - v.pos;
    return dist % 2 == 0;
}

inline std::vector<VertexId> all_vertices(const StarGraph& g) {
    std::vector<VertexId> out;
    out.push_back(VertexId::root());
    for (int l = 0; l < g.branch_count(); ++l)
        for (int j = 1; j <= g.branch_length(l); ++j) out.push_back(VertexId::on_branch(l, j));
    return out;
}

/// Locally-scalar character: one value per vertex, listed per branch from the
/// extreme point, plus the root component.
template <class S>
struct LSCharacter {
    StarGraph graph;
    std::vector<std::vector<S>> xs;  // xs[l][j-1] = x_j on branch l
    S root;

    const S& x(int l, int j) const { return xs[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - 1)]; }
    S& x(int l, int j) { return xs[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - 1)]; }

    const S& at(const VertexId& v) const { return v.is_root() ? root : x(v.branch, v.pos); }
    S& at(const VertexId& v) { return v.is_root() ? root : x(v.branch, v.pos); }

    friend bool operator==(const LSCharacter& a, const LSCharacter& b) {
        return a.graph == b.graph && a.xs == b.xs && a.root == b.root;
    }
};

template <class S>
double residual_norm(const LSCharacter<S>& a, const LSCharacter<S>& b) {
    if (a.graph != b.graph) throw std::invalid_argument("characters on different graphs");
    double m = approx_magnitude(a.root - b.root);
    for (std::size_t l = 0; l < a.xs.size(); ++l)
        for (std::size_t j = 0; j < a.xs[l].size(); ++j)
            m = std::max(m, approx_magnitude(a.xs[l][j] - b.xs[l][j]));
    return m;
}

template <class S>
LSCharacter<S> ls_scale(const LSCharacter<S>& u, const S& c) {
    LSCharacter<S> out = u;
    out.root = out.root * c;
    for (auto& branch : out.xs)
        for (auto& v : branch) v = v * c;
    return out;
}

template <class S>
LSCharacter<S> ls_add(const LSCharacter<S>& a, const LSCharacter<S>& b) {
    if (a.graph != b.graph) throw std::invalid_argument("characters on different graphs");
    LSCharacter<S> out = a;
    out.root = out.root + b.root;
    for (std::size_t l = 0; l < out.xs.size(); ++l)
        for (std::size_t j = 0; j < out.xs[l].size(); ++j) out.xs[l][j] = out.xs[l][j] + b.xs[l][j];
    return out;
}

/// chi -> u, per branch (alpha_0 = 0):
///   x_{k-2j}   = alpha_{k-j} - alpha_j,
///   x_{k-2j-1} = alpha_{k-j} - alpha_{j+1};  root component = lambda.
template <class S>
LSCharacter<S> chi_to_u(const Character<S>& chi) {
    LSCharacter<S> u{chi.graph, {}, chi.lambda};
    u.xs.resize(static_cast<std::size_t>(chi.graph.branch_count()));
    for (int l = 0; l < chi.graph.branch_count(); ++l) {
        const int k = chi.graph.branch_length(l);
        auto& xs = u.xs[static_cast<std::size_t>(l)];
        xs.assign(static_cast<std::size_t>(k), zero_like(chi.lambda));
        for (int j = 0; k - 2 * j >= 1; ++j) {
            const S& hi = chi.alpha(l, k - j);
            xs[static_cast<std::size_t>(k - 2 * j - 1)] = (j == 0) ? hi : hi - chi.alpha(l, j);
            if (k - 2 * j - 1 >= 1) xs[static_cast<std::size_t>(k - 2 * j - 2)] = hi - chi.alpha(l, j + 1);
        }
    }
    return u;
}

/// Inverse of chi_to_u by sequential reconstruction:
/// alpha_k = x_k; alpha_1 = alpha_k - x_{k-1}; alpha_{k-1} = x_{k-2} + alpha_1; ...
template <class S>
Character<S> u_to_chi(const LSCharacter<S>& u) {
    Character<S> chi{u.graph, {}, u.root};
    chi.alphas.resize(static_cast<std::size_t>(u.graph.branch_count()));
    for (int l = 0; l < u.graph.branch_count(); ++l) {
        const int k = u.graph.branch_length(l);
        auto& a = chi.alphas[static_cast<std::size_t>(l)];
        a.assign(static_cast<std::size_t>(k), zero_like(u.root));
        a[static_cast<std::size_t>(k - 1)] = u.x(l, k);  // alpha_k = x_k
        for (int j = 1; 2 * j <= k; ++j) {
            // alpha_j from x_{k-2j+1}, then alpha_{k-j} from x_{k-2j}
            a[static_cast<std::size_t>(j - 1)] = a[static_cast<std::size_t>(k - j)] - u.x(l, k - 2 * j + 1);
            if (k - 2 * j >= 1)
                a[static_cast<std::size_t>(k - j - 1)] = u.x(l, k - 2 * j) + a[static_cast<std::size_t>(j - 1)];
        }
    }
    return chi;
}

/// The special locally-scalar character, in the closed form
/// x_m = t^{ceil((k_l - m)/2)} S_{m-1}(t) / S_{k_l}(t), root = 1.
template <class S>
LSCharacter<S> special_ls_character(const StarGraph& g, const S& t, double tol = 1e-8) {
    if (!is_graph_equation_solution(g, t, tol))
        throw std::domain_error("t is not a solution of the graph equation for " + g.to_string());
    LSCharacter<S> u{g, {}, one_like(t)};
    u.xs.resize(static_cast<std::size_t>(g.branch_count()));
    for (int l = 0; l < g.branch_count(); ++l) {
        const int k = g.branch_length(l);
        S denom_inv = inv(power_sum(t, k));
        auto& xs = u.xs[static_cast<std::size_t>(l)];
        xs.reserve(static_cast<std::size_t>(k));
        for (int m = 1; m <= k; ++m)
            xs.push_back(scalar_pow(t, (k - m + 1) / 2) * power_sum(t, m - 1) * denom_inv);
    }
    return u;
}

/// Split into odd and even parts (root is odd); the complement is zero-filled.
template <class S>
std::pair<LSCharacter<S>, LSCharacter<S>> decompose(const LSCharacter<S>& u) {
    LSCharacter<S> odd = u, even = u;
    even.root = zero_like(u.root);
    for (int l = 0; l < u.graph.branch_count(); ++l)
        for (int j = 1; j <= u.graph.branch_length(l); ++j) {
            if (vertex_is_odd(u.graph, VertexId::on_branch(l, j)))
                even.x(l, j) = zero_like(u.root);
            else
                odd.x(l, j) = zero_like(u.root);
        }
    return {std::move(odd), std::move(even)};
}

/// Sum of the character over the neighbors of a vertex.
template <class S>
S neighbor_sum(const LSCharacter<S>& u, const VertexId& v) {
    const StarGraph& g = u.graph;
    S acc = zero_like(u.root);
    if (v.is_root()) {
        for (int l = 0; l < g.branch_count(); ++l) acc = acc + u.x(l, g.branch_length(l));
        return acc;
    }
    const int k = g.branch_length(v.branch);
    if (v.pos > 1) acc = acc + u.x(v.branch, v.pos - 1);
    if (v.pos < k)
        acc = acc + u.x(v.branch, v.pos + 1);
    else
        acc = acc + u.root;
    return acc;
}

/// Reflection at one vertex: the component becomes (neighbor sum) - (itself).
template <class S>
LSCharacter<S> sigma_reflect(const LSCharacter<S>& u, const VertexId& v) {
    LSCharacter<S> out = u;
    out.at(v) = neighbor_sum(u, v) - u.at(v);
    return out;
}

/// Simultaneous reflection at every vertex of the given parity; well defined
/// because same-parity vertexes are pairwise non-adjacent.
template <class S>
LSCharacter<S> coxeter_parity(const LSCharacter<S>& u, bool odd) {
    LSCharacter<S> out = u;
    for (const VertexId& v : all_vertices(u.graph))
        if (vertex_is_odd(u.graph, v) == odd) out.at(v) = neighbor_sum(u, v) - u.at(v);
    return out;
}

template <class S>
LSCharacter<S> coxeter_odd(const LSCharacter<S>& u) {
    return coxeter_parity(u, true);
}

template <class S>
LSCharacter<S> coxeter_even(const LSCharacter<S>& u) {
    return coxeter_parity(u, false);
}

}  // namespace starchar
