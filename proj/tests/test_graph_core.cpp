#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "starchar/graph_roots.hpp"
#include "starchar/star_graph.hpp"
#include "test_support.hpp"

using namespace starchar;
using testsup::rand_int;

TEST_CASE("star graph validation and canonical order", "[graph]") {
    REQUIRE(StarGraph({1, 2, 6}).branch_lengths() == std::vector<int>{6, 2, 1});
    REQUIRE(StarGraph({3}).vertex_count() == 4);
    REQUIRE(StarGraph({2, 2, 3}).vertex_count() == 8);
    REQUIRE_THROWS_AS(StarGraph({}), std::invalid_argument);
    REQUIRE_THROWS_AS(StarGraph({2, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(StarGraph({-1}), std::invalid_argument);
}

TEST_CASE("classification of the ADE families", "[graph]") {
    auto cls = [](std::vector<int> b) { return classify(StarGraph(std::move(b))); };

    REQUIRE(cls({1, 1, 1}).kind == GraphKind::Dynkin);
    REQUIRE(cls({1, 1, 1}).name == "D4");
    REQUIRE(cls({5, 2, 1}).kind == GraphKind::ExtendedDynkin);
    REQUIRE(cls({5, 2, 1}).name == "E~8");
    REQUIRE(cls({1, 1, 1, 1, 1}).kind == GraphKind::Hyperbolic);

    // A: one or two branches, any lengths
    REQUIRE(cls({4}).name == "A5");
    REQUIRE(cls({3, 2}).name == "A6");
    REQUIRE(cls({6, 6}).kind == GraphKind::Dynkin);

    // D and E tables
    REQUIRE(cls({2, 1, 1}).name == "D5");
    REQUIRE(cls({10, 1, 1}).name == "D13");
    REQUIRE(cls({2, 2, 1}).name == "E6");
    REQUIRE(cls({1, 2, 3}).name == "E7");  // canonicalized to (3,2,1)
    REQUIRE(cls({4, 2, 1}).name == "E8");

    // the four extended Dynkin multisets
    REQUIRE(cls({1, 1, 1, 1}).name == "D~4");
    REQUIRE(cls({2, 2, 2}).name == "E~6");
    REQUIRE(cls({3, 3, 1}).name == "E~7");

    // just past the boundary
    REQUIRE(cls({6, 2, 1}).kind == GraphKind::Hyperbolic);
    REQUIRE(cls({4, 3, 1}).kind == GraphKind::Hyperbolic);
    REQUIRE(cls({2, 2, 3}).kind == GraphKind::Hyperbolic);

    // classification witness has the right sign
    REQUIRE(cls({1, 1, 1}).boundary_sign < 0);
    REQUIRE(cls({2, 2, 2}).boundary_sign == 0);
    REQUIRE(cls({1, 1, 1, 1, 1}).boundary_sign > 0);
}

TEST_CASE("classification is permutation invariant", "[graph]") {
    std::mt19937 rng(99);
    for (int i = 0; i < 30; ++i) {
        std::vector<int> b(static_cast<std::size_t>(rand_int(rng, 1, 5)));
        for (auto& k : b) k = static_cast<int>(rand_int(rng, 1, 6));
        GraphClass ref = classify(StarGraph(b));
        std::shuffle(b.begin(), b.end(), rng);
        GraphClass got = classify(StarGraph(b));
        REQUIRE(ref.kind == got.kind);
        REQUIRE(ref.name == got.name);
    }
}

TEST_CASE("graph equation polynomial", "[graph]") {
    auto P = [](std::initializer_list<long> asc) {
        std::vector<Rational> c;
        for (long v : asc) c.emplace_back(v);
        return RatPoly(std::move(c));
    };
    // frozen expansions of (4-t)(1+t)^5 - 5(1+t)^4 and the (1,1,1,2) analogue
    REQUIRE(graph_equation_poly(StarGraph({1, 1, 1, 1, 1})) == P({-1, -1, 5, 10, 5, -1, -1}));
    REQUIRE(graph_equation_poly(StarGraph({1, 1, 1, 2})) == P({-1, -1, 2, 4, 2, -1, -1}));
    REQUIRE(graph_equation_poly(StarGraph({1, 1, 1, 2})) ==
            Rational(-1) * poly_pow(P({1, 1}), 2) * P({1, -1, -1, -1, 1}));
    // extended Dynkin: t = 1 is a root
    REQUIRE(graph_equation_poly(StarGraph({1, 1, 1, 1})).eval(Rational(1)) == 0);
    REQUIRE(graph_equation_poly(StarGraph({5, 2, 1})).eval(Rational(1)) == 0);
}

TEST_CASE("graph polynomial equals F times the product of power sums", "[graph]") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        std::vector<int> b(static_cast<std::size_t>(rand_int(rng, 1, 4)));
        for (auto& k : b) k = static_cast<int>(rand_int(rng, 1, 5));
        StarGraph g(b);
        Rational t = testsup::rand_rational(rng, 6, 4);
        if (t < 0) t = -t;
        Rational prod = 1;
        for (int k : g.branch_lengths()) prod *= power_sum(t, k);
        REQUIRE(graph_equation_poly(g).eval(t) == graph_equation_value(g, t) * prod);
    }
}

TEST_CASE("graph polynomial is palindromic", "[graph]") {
    std::mt19937 rng(31);
    for (int i = 0; i < 25; ++i) {
        std::vector<int> b(static_cast<std::size_t>(rand_int(rng, 3, 6)));
        for (auto& k : b) k = static_cast<int>(rand_int(rng, 1, 6));
        RatPoly p = graph_equation_poly(StarGraph(b));
        std::vector<Rational> rev(p.coeffs().rbegin(), p.coeffs().rend());
        REQUIRE(RatPoly(std::move(rev)) == p);  // t^deg P(1/t) = P(t)
    }
}

TEST_CASE("positive roots of the minimal hyperbolic example", "[roots]") {
    StarGraph g({1, 1, 1, 1, 1});
    Rational prec = parse_decimal("1e-12");
    PositiveRoots roots = solve_positive_roots(g, prec);

    // golden-ratio values from the quadratic t^2 - 3t + 1
    REQUIRE(std::abs(roots.t2.value() - 2.61803398874989485) < 1e-11);
    REQUIRE(std::abs(roots.t1.value() - 0.381966011250105152) < 1e-11);

    // certified: the enclosure brackets a sign change and is tight
    for (const RootEnclosure* e : {&roots.t1, &roots.t2}) {
        REQUIRE(e->width() <= prec);
        Rational flo = graph_equation_value(g, e->lo);
        Rational fhi = graph_equation_value(g, e->hi);
        REQUIRE(((flo >= 0 && fhi <= 0) || (flo <= 0 && fhi >= 0)));
    }
    REQUIRE(roots.t1.lo > 0);
    REQUIRE(roots.t1.hi < 1);
    REQUIRE(roots.t2.lo > 1);
    REQUIRE(roots.t2.hi < 4);

    REQUIRE_THROWS_AS(solve_positive_roots(StarGraph({1, 1, 1, 1}), prec), std::domain_error);
    REQUIRE_THROWS_AS(solve_positive_roots(StarGraph({2, 2, 1}), prec), std::domain_error);
    REQUIRE_THROWS_AS(solve_positive_roots(g, Rational(0)), std::invalid_argument);
}

TEST_CASE("roots multiply to one across sampled hyperbolic graphs", "[roots]") {
    std::mt19937 rng(404);
    Rational prec = parse_decimal("1e-13");
    int found = 0;
    while (found < 12) {
        std::vector<int> b(static_cast<std::size_t>(rand_int(rng, 3, 6)));
        for (auto& k : b) k = static_cast<int>(rand_int(rng, 1, 6));
        StarGraph g(b);
        if (classify(g).kind != GraphKind::Hyperbolic) continue;
        ++found;
        PositiveRoots roots = solve_positive_roots(g, prec);
        REQUIRE(std::abs(roots.t1.value() * roots.t2.value() - 1.0) < 2e-12);
        REQUIRE(roots.t1.lo > 0);
        REQUIRE(roots.t1.hi < 1);
        REQUIRE(roots.t2.lo > 1);
        REQUIRE(roots.t2.hi < g.branch_count() - 1);
    }
}

TEST_CASE("spectral radius", "[spectral]") {
    REQUIRE(std::abs(spectral_radius(StarGraph({1, 1, 1, 1}), 1e-10) - 2.0) < 1e-9);
    REQUIRE(std::abs(spectral_radius(StarGraph({1, 1, 1, 1, 1}), 1e-10) - 2.23606797749978970) < 1e-9);
    REQUIRE(std::abs(spectral_radius(StarGraph({2, 2, 2}), 1e-10) - 2.0) < 1e-9);
    // paths: K2 has r = 1, path of 3 vertexes has r = sqrt(2)
    REQUIRE(std::abs(spectral_radius(StarGraph({1}), 1e-10) - 1.0) < 1e-9);
    REQUIRE(std::abs(spectral_radius(StarGraph({2}), 1e-10) - std::sqrt(2.0)) < 1e-9);
    REQUIRE_THROWS_AS(spectral_radius(StarGraph({1}), 0.0), std::invalid_argument);
}

TEST_CASE("hypothesis residual", "[spectral]") {
    REQUIRE(hypothesis_residual(StarGraph({1, 1, 1, 1}), 1e-10) < 1e-9);      // 1+1+2 = 4 = 2^2
    REQUIRE(hypothesis_residual(StarGraph({1, 1, 1, 1, 1}), 1e-10) < 1e-9);   // 3+2 = 5 = sqrt(5)^2
    REQUIRE(hypothesis_residual(StarGraph({1, 2, 6}), 1e-10) < 1e-9);
    REQUIRE_THROWS_AS(hypothesis_residual(StarGraph({1, 2, 4}), 1e-10), std::domain_error);  // E8 is Dynkin
}

TEST_CASE("star graph enumeration", "[graph]") {
    auto graphs = enumerate_star_graphs(2, 2);
    REQUIRE(graphs.size() == 5);  // (1),(2),(1,1),(2,1),(2,2)
    auto all66 = enumerate_star_graphs(6, 6);
    REQUIRE(all66.size() == 923);  // multisets of size <= 6 from {1..6}
    // deterministic and duplicate-free
    for (std::size_t i = 1; i < all66.size(); ++i) REQUIRE(!(all66[i - 1] == all66[i]));
}
