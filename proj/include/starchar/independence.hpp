#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "starchar/character.hpp"
#include "starchar/factor.hpp"
#include "starchar/graph_roots.hpp"
#include "starchar/linalg.hpp"
#include "starchar/number_field.hpp"
#include "starchar/star_graph.hpp"

namespace starchar {

/// Desk-checkable kernel of the infinite-dimensionality argument: the minimal
/// polynomial of t, its irreducibility, and whether 1 lies in the rational
/// span of the special character's alpha-components (lambda excluded).
struct Certificate {
    StarGraph graph;
    RatPoly p_gamma;  // monic minimal polynomial of t over Q
    bool irreducible = false;
    bool one_in_span = false;
    int basis_dimension = 0;  // = deg p_gamma
    std::vector<std::vector<Rational>> component_vectors;  // alphas in the power basis 1, t, ..., t^{m-1}
    std::optional<std::vector<Rational>> span_witness;     // coefficients when one_in_span
};

/// The five minimal hyperbolic graphs: every star graph properly containing
/// an extended Dynkin graph contains (or coincides with) one of these.
inline std::vector<StarGraph> minimal_hyperbolic_graphs() {
    return {
        StarGraph({1, 1, 1, 1, 1}), StarGraph({1, 1, 1, 2}), StarGraph({2, 2, 3}),
        StarGraph({1, 3, 4}),       StarGraph({1, 2, 6}),
    };
}

enum class WhichRoot { T1, T2 };

/// Monic irreducible factor of the graph polynomial whose real roots include
/// the requested positive solution, located by exact sign changes over a
/// shrinking certified enclosure.
inline RatPoly minimal_polynomial_of_t(const StarGraph& g, WhichRoot which) {
    if (classify(g).kind != GraphKind::Hyperbolic)
        throw std::domain_error("graph " + g.to_string() + " is not hyperbolic");
    RatPoly p = squarefree_part(graph_equation_poly(g));
    std::vector<std::pair<RatPoly, int>> factors = factor_over_rationals(p);

    Rational width = Rational(1, 1 << 20);
    for (int attempt = 0; attempt < 64; ++attempt, width /= 1024) {
        PositiveRoots roots = solve_positive_roots(g, width);
        const RootEnclosure& enc = (which == WhichRoot::T1) ? roots.t1 : roots.t2;
        std::vector<const RatPoly*> candidates;
        bool endpoint_hit = false;
        for (const auto& [f, mult] : factors) {
            Rational flo = f.eval(enc.lo), fhi = f.eval(enc.hi);
            if (flo == 0 || fhi == 0) {
                // a dyadic endpoint landed on some factor's root; shrink and retry
                endpoint_hit = true;
                break;
            }
            if ((flo > 0) != (fhi > 0)) candidates.push_back(&f);
        }
        if (!endpoint_hit && candidates.size() == 1) return *candidates.front();
        if (!endpoint_hit && candidates.empty())
            throw std::logic_error("no irreducible factor brackets the root of " + g.to_string());
    }
    throw std::logic_error("could not isolate the minimal polynomial for " + g.to_string());
}

/// Builds the special character exactly over Q[t]/(p_Gamma) (or over Q when
/// t = 1) and tests whether 1 = (1, 0, ..., 0) is a rational combination of
/// the alpha-component vectors in the power basis.
inline Certificate one_in_rational_span_of_components(const StarGraph& g, WhichRoot which = WhichRoot::T2) {
    GraphClass cls = classify(g);
    if (cls.kind == GraphKind::Dynkin)
        throw std::domain_error("graph " + g.to_string() + " is Dynkin; no special character exists");

    Certificate cert{g, RatPoly(), false, false, 0, {}, std::nullopt};
    if (cls.kind == GraphKind::ExtendedDynkin) {
        // t = 1: the field is Q itself, power basis {1}.
        cert.p_gamma = RatPoly({Rational(-1), Rational(1)});  // t - 1
        cert.irreducible = true;
        cert.basis_dimension = 1;
        Character<Rational> chi = special_character(g, Rational(1));
        for (int l = 0; l < g.branch_count(); ++l)
            for (int j = 1; j <= g.branch_length(l); ++j) cert.component_vectors.push_back({chi.alpha(l, j)});
    } else {
        cert.p_gamma = minimal_polynomial_of_t(g, which);
        cert.irreducible = true;  // output of the exact complete factorization
        cert.basis_dimension = cert.p_gamma.degree();
        NumberFieldPtr field = NumberField::make(cert.p_gamma);
        NFElem t = NFElem::generator(field);
        Character<NFElem> chi = special_character(g, t);
        for (int l = 0; l < g.branch_count(); ++l)
            for (int j = 1; j <= g.branch_length(l); ++j) cert.component_vectors.push_back(chi.alpha(l, j).coeffs());
    }
    std::vector<Rational> one(static_cast<std::size_t>(cert.basis_dimension), Rational(0));
    one[0] = 1;
    auto witness = in_rational_span(one, cert.component_vectors);
    cert.one_in_span = witness.has_value();
    cert.span_witness = std::move(witness);
    return cert;
}

/// Full certification run. For the five minimal graphs the expected outcome
/// is irreducible = true and one_in_span = false; extended Dynkin graphs
/// correctly come back with one_in_span = true. Propagates
/// FactorizationLimitError when the graph polynomial is out of reach.
inline Certificate certify_infinite_dimensional(const StarGraph& g, WhichRoot which = WhichRoot::T2) {
    return one_in_rational_span_of_components(g, which);
}

}  // namespace starchar
