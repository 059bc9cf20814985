#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "starchar/rational.hpp"
#include "starchar/star_graph.hpp"

namespace starchar {

/// Certified bracket around a real root: the true root lies in [lo, hi] and
/// the endpoints are dyadic rationals, so they print exactly in decimal.
struct RootEnclosure {
    Rational lo, hi;
    double value() const { return to_double((lo + hi) / 2); }
    Rational width() const { return hi - lo; }
};

struct PositiveRoots {
    RootEnclosure t1;  // in (0, 1)
    RootEnclosure t2;  // in (1, n-1)
};

namespace detail {

/// Bisection with exact rational sign evaluation; [lo, hi] must bracket a
/// sign change of F.
inline RootEnclosure bisect_graph_equation(const StarGraph& g, Rational lo, Rational hi, const Rational& precision) {
    Rational flo = graph_equation_value(g, lo);
    Rational fhi = graph_equation_value(g, hi);
    if (flo == 0) return {lo, lo};
    if (fhi == 0) return {hi, hi};
    if ((flo > 0) == (fhi > 0)) throw std::logic_error("bisection bracket does not enclose a sign change");
    const bool lo_positive = flo > 0;
    while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        Rational fm = graph_equation_value(g, mid);
        if (fm == 0) return {mid, mid};
        if ((fm > 0) == lo_positive)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace detail

/// Both positive solutions of the graph equation for a hyperbolic graph,
/// each within `precision`. F(0) = -1 < 0 < F(1) and F(n-1) < 0 certify the
/// brackets; endpoints are checked exactly before bisecting.
inline PositiveRoots solve_positive_roots(const StarGraph& g, const Rational& precision) {
    if (classify(g).kind != GraphKind::Hyperbolic)
        throw std::domain_error("graph " + g.to_string() + " is not hyperbolic; no pair of positive roots");
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    const int n = g.branch_count();
    Rational upper = Rational(n - 1);
    // F(n-1) = -sum 1/S < 0 always holds; widen defensively if it ever did not.
    while (graph_equation_value(g, upper) >= 0) upper += 1;
    PositiveRoots out;
    out.t1 = detail::bisect_graph_equation(g, Rational(0), Rational(1), precision);
    out.t2 = detail::bisect_graph_equation(g, Rational(1), upper, precision);
    return out;
}

/// Largest adjacency eigenvalue of the star graph, certified by the
/// Collatz-Wielandt bounds of the shifted matrix A + I under power iteration.
inline double spectral_radius(const StarGraph& g, double precision) {
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    const int n = g.branch_count();
    const int v_count = g.vertex_count();
    // vertex 0 = root; branch l occupies a contiguous block, leaf first
    std::vector<int> branch_start(static_cast<std::size_t>(n));
    {
        int idx = 1;
        for (int l = 0; l < n; ++l) {
            branch_start[static_cast<std::size_t>(l)] = idx;
            idx += g.branch_length(l);
        }
    }
    auto apply_shifted = [&](const std::vector<double>& x, std::vector<double>& y) {
        // y = (A + I) x
        for (int i = 0; i < v_count; ++i) y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
        for (int l = 0; l < n; ++l) {
            const int s = branch_start[static_cast<std::size_t>(l)];
            const int k = g.branch_length(l);
            for (int j = 0; j + 1 < k; ++j) {  // chain edges leaf..root-adjacent
                y[static_cast<std::size_t>(s + j)] += x[static_cast<std::size_t>(s + j + 1)];
                y[static_cast<std::size_t>(s + j + 1)] += x[static_cast<std::size_t>(s + j)];
            }
            y[static_cast<std::size_t>(s + k - 1)] += x[0];  // edge to root
            y[0] += x[static_cast<std::size_t>(s + k - 1)];
        }
    };
    std::vector<double> x(static_cast<std::size_t>(v_count), 1.0), y(static_cast<std::size_t>(v_count));
    for (long iter = 0; iter < 2000000; ++iter) {
        apply_shifted(x, y);
        double lo = y[0] / x[0], hi = lo;
        for (int i = 1; i < v_count; ++i) {
            double q = y[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        if (hi - lo < precision) return (lo + hi) / 2 - 1.0;
        double norm = 0;
        for (double v : y) norm = std::max(norm, v);
        for (int i = 0; i < v_count; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;
    }
    throw std::runtime_error("power iteration failed to converge");
}

/// |t + 1/t + 2 - r^2| with t = t2 (or t = 1 for extended Dynkin graphs).
/// A report, not an assumption: callers record the residual.
inline double hypothesis_residual(const StarGraph& g, double precision) {
    GraphClass cls = classify(g);
    if (cls.kind == GraphKind::Dynkin)
        throw std::domain_error("graph " + g.to_string() + " is Dynkin; the graph equation has no solution");
    double r = spectral_radius(g, precision / 16);
    double t = 1.0;
    if (cls.kind == GraphKind::Hyperbolic) {
        // dyadic bisection width below precision/16
        Rational w = Rational(1);
        while (to_double(w) > precision / 16) w /= 2;
        t = solve_positive_roots(g, w).t2.value();
    }
    return std::abs(t + 1.0 / t + 2.0 - r * r);
}

}  // namespace starchar
