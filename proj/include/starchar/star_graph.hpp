#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "starchar/polynomial.hpp"
#include "starchar/rational.hpp"
#include "starchar/scalar.hpp"

namespace starchar {

/// Star-shaped graph: n branches of k_l non-root vertexes each, joined at a
/// single root. Branch lengths are kept in canonical non-increasing order;
/// classification and naming are order-independent.
class StarGraph {
public:
    explicit StarGraph(std::vector<int> branch_lengths) : k_(std::move(branch_lengths)) {
        if (k_.empty()) throw std::invalid_argument("star graph needs at least one branch");
        for (int k : k_)
            if (k < 1) throw std::invalid_argument("branch lengths must be positive");
        std::sort(k_.begin(), k_.end(), std::greater<int>());
    }

    int branch_count() const { return static_cast<int>(k_.size()); }
    int branch_length(int l) const { return k_[static_cast<std::size_t>(l)]; }
    const std::vector<int>& branch_lengths() const { return k_; }
    int max_branch_length() const { return k_.front(); }
    int vertex_count() const { return std::accumulate(k_.begin(), k_.end(), 1); }

    friend bool operator==(const StarGraph& a, const StarGraph& b) { return a.k_ == b.k_; }
    friend bool operator!=(const StarGraph& a, const StarGraph& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < k_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> k_;
};

enum class GraphKind { Dynkin, ExtendedDynkin, Hyperbolic };

inline const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::Dynkin: return "Dynkin";
        case GraphKind::ExtendedDynkin: return "ExtendedDynkin";
        case GraphKind::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

/// Classification result. For extended Dynkin graphs the unique solution of
/// the graph equation is t = 1 exactly; for hyperbolic graphs Theorem-level
/// isolation gives t1 in (0,1) and t2 in (1, n-1).
struct GraphClass {
    GraphKind kind;
    std::string name;        // "A5", "D7", "E8", "D~4", "E~7", ... ; empty for hyperbolic
    Rational boundary_sign;  // exact F(1) = n-2 - sum 1/(k_l+1); the classification witness
};

/// Exact classification by the sign of F(1) in rational arithmetic.
inline GraphClass classify(const StarGraph& g) {
    const auto& ks = g.branch_lengths();
    const int n = g.branch_count();
    Rational f1 = Rational(n - 2);
    for (int k : ks) f1 -= Rational(1, k + 1);

    GraphClass out;
    out.boundary_sign = f1;
    if (f1 < 0) {
        out.kind = GraphKind::Dynkin;
        if (n <= 2) {
            out.name = "A" + std::to_string(g.vertex_count());
        } else if (ks[1] == 1) {  // (k,1,1)
            out.name = "D" + std::to_string(ks[0] + 3);
        } else {  // (2,2,1), (3,2,1), (4,2,1)
            out.name = "E" + std::to_string(ks[0] + 4);
        }
    } else if (f1 == 0) {
        out.kind = GraphKind::ExtendedDynkin;
        if (n == 4) out.name = "D~4";           // (1,1,1,1)
        else if (ks[0] == 2) out.name = "E~6";  // (2,2,2)
        else if (ks[0] == 3) out.name = "E~7";  // (3,3,1)
        else out.name = "E~8";                  // (5,2,1)
    } else {
        out.kind = GraphKind::Hyperbolic;
    }
    return out;
}

/// Polynomial form of the graph equation after clearing denominators:
/// P(t) = (n-1-t) * prod_l S_{k_l}(t) - sum_l prod_{m != l} S_{k_m}(t).
/// Every solution of the equation on [0, inf) is a root of P.
inline RatPoly graph_equation_poly(const StarGraph& g) {
    const int n = g.branch_count();
    std::vector<RatPoly> s(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        std::vector<Rational> ones(static_cast<std::size_t>(g.branch_length(l)) + 1, Rational(1));
        s[static_cast<std::size_t>(l)] = RatPoly(std::move(ones));
    }
    RatPoly prod = RatPoly::constant(Rational(1));
    for (const auto& sl : s) prod = prod * sl;
    RatPoly lead = RatPoly({Rational(n - 1), Rational(-1)});  // n-1-t
    RatPoly sum;
    for (int l = 0; l < n; ++l) {
        RatPoly term = RatPoly::constant(Rational(1));
        for (int m = 0; m < n; ++m)
            if (m != l) term = term * s[static_cast<std::size_t>(m)];
        sum = sum + term;
    }
    return lead * prod - sum;
}

/// F(t) = n-1-t - sum_l 1/S_{k_l}(t), evaluated exactly at rational t >= 0.
inline Rational graph_equation_value(const StarGraph& g, const Rational& t) {
    Rational acc = Rational(g.branch_count() - 1) - t;
    for (int k : g.branch_lengths()) acc -= Rational(1) / power_sum(t, k);
    return acc;
}

/// All star graphs with up to max_branches branches and branch lengths up to
/// max_k, in deterministic (lexicographic, non-increasing) order.
inline std::vector<StarGraph> enumerate_star_graphs(int max_branches, int max_k) {
    std::vector<StarGraph> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (!cur.empty()) out.emplace_back(cur);
        if (remaining == 0) return;
        for (int k = cap; k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - 1, k);
            cur.pop_back();
        }
    };
    rec(max_branches, max_k);
    return out;
}

}  // namespace starchar
