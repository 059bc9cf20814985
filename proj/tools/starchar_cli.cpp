// starchar: classify star-shaped graphs via the graph equation, build and
// transform special characters, verify the reflection-functor identities, and
// run the irreducibility / rational-span certification.
//
// Commands: classify, verify, certify, hypothesis, orbit.
// Exit codes: 0 pass/reported, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "starchar/starchar.hpp"

using json = nlohmann::ordered_json;
using namespace starchar;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_branches(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v < 1) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("branch list must be comma-separated positive integers, got '" + s + "'");
        }
    }
    if (out.empty()) throw UsageError("empty branch list");
    return out;
}

std::string frac_string(const Rational& q) {
    std::string s = numerator(q).convert_to<std::string>();
    if (denominator(q) != 1) s += "/" + denominator(q).convert_to<std::string>();
    return s;
}

json enclosure_json(const RootEnclosure& e) {
    return json{{"lo", to_decimal_string(e.lo)}, {"hi", to_decimal_string(e.hi)}};
}

json poly_json(const RatPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(frac_string(c));
    return json{{"degree", p.degree()}, {"coefficients", coeffs}, {"display", p.to_string()}};
}

json graph_json(const StarGraph& g) {
    json a = json::array();
    for (int k : g.branch_lengths()) a.push_back(k);
    return a;
}

void print_table(const json& doc, std::ostream& os, const std::string& prefix = "") {
    for (const auto& [key, value] : doc.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            print_table(value, os, name);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            int i = 0;
            for (const auto& item : value) print_table(item, os, name + "[" + std::to_string(i++) + "]");
        } else {
            os << name << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

struct Context {
    std::string format = "json";
    Rational precision = parse_decimal("1e-10");
    std::string precision_text = "1e-10";

    double tol() const { return to_double(precision); }
    Rational solver_width() const { return precision / 100; }
};

int emit(const Context& ctx, json doc, const std::string& status) {
    doc["status"] = status;
    doc["tool_version"] = kToolVersion;
    if (ctx.format == "table")
        print_table(doc, std::cout);
    else
        std::cout << doc.dump(2) << "\n";
    return status == "fail" ? 1 : 0;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int cmd_classify(const Context& ctx, const StarGraph& g) {
    GraphClass cls = classify(g);
    json doc{{"command", "classify"}, {"graph", graph_json(g)}, {"class", to_string(cls.kind)}};
    json results;
    if (!cls.name.empty()) results["name"] = cls.name;
    if (cls.kind == GraphKind::ExtendedDynkin) results["t"] = "1";
    if (cls.kind == GraphKind::Hyperbolic) {
        PositiveRoots roots = solve_positive_roots(g, ctx.precision);
        results["t1"] = enclosure_json(roots.t1);
        results["t2"] = enclosure_json(roots.t2);
        results["precision"] = ctx.precision_text;
    }
    doc["results"] = results;
    return emit(ctx, std::move(doc), "reported");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

bool is_minimal_graph(const StarGraph& g) {
    for (const auto& m : minimal_hyperbolic_graphs())
        if (m == g) return true;
    return false;
}

// one identity suite evaluated with a scalar t; returns pass, fills detail
template <class S>
bool run_check(const std::string& which, const StarGraph& g, const S& t, double tol, int max_j, json& detail) {
    const OrbitVariant kinds[] = {{StartPart::OddPart, false},
                                  {StartPart::OddPart, true},
                                  {StartPart::EvenPart, false},
                                  {StartPart::EvenPart, true}};
    if (which == "ts-eigen") return verify_ts_eigen(g, t, tol);
    if (which == "eq5") return identity_sum_highest(g, t, tol);
    if (which == "gamma") {
        S v = gamma_form(special_character(g, t, tol > 0 ? tol : 1e-8));
        detail["gamma_magnitude"] = approx_magnitude(v);
        if constexpr (is_exact_scalar_v<S>)
            return is_zero(v);
        else
            return approx_magnitude(v) <= tol;
    }
    if (which == "sigma") {
        LSCharacter<S> u = special_ls_character(g, t, tol > 0 ? tol : 1e-8);
        double worst = 0;
        for (const auto& v : all_vertices(g)) {
            S reflected = sigma_reflect(u, v).at(v);
            S factor = vertex_is_odd(g, v) ? inv(t) : t;
            worst = std::max(worst, approx_magnitude(reflected - factor * u.at(v)));
        }
        detail["max_residual"] = worst;
        return worst <= tol;
    }
    if (which == "prop5") {
        auto [uo, ue] = decompose(special_ls_character(g, t, tol > 0 ? tol : 1e-8));
        double worst = 0;
        for (const auto& v : kinds) {
            for (int j = 0; j <= max_j; ++j) {
                ParityPair<S> closed = closed_form_iterate(v, j, t);
                ParityPair<S> rec = parity_evolution(parity_start(v.start, t), orbit_word(v, j), t);
                // the iterates grow like t^{-j}, so compare relative to their size
                double scale = std::max({1.0, approx_magnitude(closed.odd_coeff), approx_magnitude(closed.even_coeff)});
                worst = std::max(worst, approx_magnitude(closed.odd_coeff - rec.odd_coeff) / scale);
                worst = std::max(worst, approx_magnitude(closed.even_coeff - rec.even_coeff) / scale);
                // direct simultaneous reflections on the assembled vector
                LSCharacter<S> iterated = (v.start == StartPart::OddPart) ? uo : ue;
                for (Step s : orbit_word(v, j))
                    iterated = (s == Step::Odd) ? coxeter_odd(iterated) : coxeter_even(iterated);
                worst = std::max(worst, residual_norm(iterated, assemble(closed, uo, ue)) / scale);
            }
        }
        detail["max_relative_residual"] = worst;
        return worst <= tol;
    }
    if (which == "rho") {
        const S one = one_like(t);
        const S lambda = t + inv(t);
        const S factor = t * inv((one + t) * (one + t));
        double worst = 0;
        for (int n = 0; n <= 20; ++n) {
            S lhs = inv(rho(n + 1, t));
            S rhs = factor * (lambda + one + one - rho(n, t));
            worst = std::max(worst, approx_magnitude(lhs - rhs));
        }
        detail["max_residual"] = worst;
        return worst <= tol;
    }
    throw UsageError("unknown check '" + which + "'");
}

// the prop7 limit check is numeric-only (needs an ordered t different from 1)
bool run_limits_check(double t, json& detail) {
    const OrbitVariant kinds[] = {{StartPart::OddPart, false},
                                  {StartPart::OddPart, true},
                                  {StartPart::EvenPart, false},
                                  {StartPart::EvenPart, true}};
    double worst = 0;
    for (const auto& v : kinds) {
        ParityPair<double> target = limit_target(v, t);
        ParityPair<double> norm = normalize(closed_form_iterate(v, 40, t));
        worst = std::max(worst, std::abs(norm.even_coeff - target.even_coeff));
    }
    detail["distance_at_j40"] = worst;
    return worst < 1e-6;
}

int cmd_verify(const Context& ctx, const StarGraph& g, const std::string& which, int max_j) {
    GraphClass cls = classify(g);
    if (cls.kind == GraphKind::Dynkin)
        throw UsageError("graph " + g.to_string() + " is Dynkin; the checks need a solution t");

    json doc{{"command", "verify"}, {"graph", graph_json(g)}, {"class", to_string(cls.kind)}};
    json results{{"which", which}};
    bool pass = true;

    if (which == "limits") {
        if (cls.kind == GraphKind::ExtendedDynkin)
            throw UsageError("limit targets are undefined at t = 1 (extended Dynkin graph)");
        PositiveRoots roots = solve_positive_roots(g, ctx.solver_width());
        for (const char* root_name : {"t1", "t2"}) {
            double t = (std::string(root_name) == "t1") ? roots.t1.value() : roots.t2.value();
            json detail{{"t", t}};
            pass = run_limits_check(t, detail) && pass;
            results[root_name] = detail;
        }
        results["regime"] = "numeric";
        results["precision"] = ctx.precision_text;
    } else if (cls.kind == GraphKind::ExtendedDynkin) {
        json detail;
        pass = run_check(which, g, Rational(1), 0.0, max_j, detail);
        detail["t"] = "1";
        results["regime"] = "exact-rational";
        results["detail"] = detail;
    } else if (is_minimal_graph(g)) {
        RatPoly pg = minimal_polynomial_of_t(g, WhichRoot::T2);
        NumberFieldPtr field = NumberField::make(pg);
        json detail;
        pass = run_check(which, g, NFElem::generator(field), 0.0, max_j, detail);
        detail["modulus"] = pg.to_string();
        results["regime"] = "exact-field";
        results["detail"] = detail;
    } else {
        PositiveRoots roots = solve_positive_roots(g, ctx.solver_width());
        for (const char* root_name : {"t1", "t2"}) {
            double t = (std::string(root_name) == "t1") ? roots.t1.value() : roots.t2.value();
            json detail{{"t", t}};
            pass = run_check(which, g, t, ctx.tol(), max_j, detail) && pass;
            results[root_name] = detail;
        }
        results["regime"] = "numeric";
        results["precision"] = ctx.precision_text;
    }
    doc["results"] = results;
    return emit(ctx, std::move(doc), pass ? "pass" : "fail");
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

json certificate_json(const Certificate& cert) {
    json c{{"graph", graph_json(cert.graph)},
           {"p_gamma", poly_json(cert.p_gamma)},
           {"irreducible", cert.irreducible},
           {"one_in_span", cert.one_in_span},
           {"basis_dimension", cert.basis_dimension}};
    json vecs = json::array();
    for (const auto& v : cert.component_vectors) {
        json vec = json::array();
        for (const auto& q : v) vec.push_back(frac_string(q));
        vecs.push_back(vec);
    }
    c["component_vectors"] = vecs;
    if (cert.span_witness) {
        json w = json::array();
        for (const auto& q : *cert.span_witness) w.push_back(frac_string(q));
        c["span_witness"] = w;
    }
    return c;
}

int cmd_certify(const Context& ctx, const std::optional<StarGraph>& graph, bool all_minimal) {
    std::vector<StarGraph> graphs;
    if (all_minimal)
        graphs = minimal_hyperbolic_graphs();
    else if (graph)
        graphs.push_back(*graph);
    else
        throw UsageError("certify needs --branches or --all-minimal");

    json doc{{"command", "certify"}};
    if (graphs.size() == 1) doc["graph"] = graph_json(graphs.front());
    json certs = json::array();
    std::string status = "reported";
    for (const auto& g : graphs) {
        GraphClass cls = classify(g);
        if (cls.kind == GraphKind::Dynkin) throw UsageError("graph " + g.to_string() + " is Dynkin; nothing to certify");
        try {
            Certificate cert = certify_infinite_dimensional(g);
            json c = certificate_json(cert);
            c["class"] = to_string(cls.kind);
            if (is_minimal_graph(g)) {
                bool ok = cert.irreducible && !cert.one_in_span;
                c["certified_infinite_dimensional"] = ok;
                if (!ok)
                    status = "fail";
                else if (status != "fail")
                    status = "pass";
            }
            certs.push_back(std::move(c));
        } catch (const FactorizationLimitError& e) {
            json c{{"graph", graph_json(g)}, {"note", "factorization-incomplete"}, {"message", e.what()}};
            certs.push_back(std::move(c));
        }
    }
    doc["results"] = json{{"certificates", certs}};
    return emit(ctx, std::move(doc), status);
}

// ---------------------------------------------------------------------------
// hypothesis
// ---------------------------------------------------------------------------

int cmd_hypothesis(const Context& ctx, int max_branches, int max_k) {
    if (max_branches < 3) throw UsageError("--max-branches must be at least 3");
    if (max_k < 1) throw UsageError("--max-k must be at least 1");
    const double threshold = 100.0 * ctx.tol();
    json counterexamples = json::array();
    double max_residual = 0;
    long swept = 0;
    for (const StarGraph& g : enumerate_star_graphs(max_branches, max_k)) {
        GraphClass cls = classify(g);
        if (cls.kind == GraphKind::Dynkin) continue;
        ++swept;
        double residual = hypothesis_residual(g, ctx.tol());
        max_residual = std::max(max_residual, residual);
        if (residual > threshold) {
            json ce{{"graph", graph_json(g)}, {"residual", residual}, {"r", spectral_radius(g, ctx.tol() / 16)}};
            if (cls.kind == GraphKind::Hyperbolic) {
                PositiveRoots roots = solve_positive_roots(g, ctx.solver_width());
                ce["t1"] = enclosure_json(roots.t1);
                ce["t2"] = enclosure_json(roots.t2);
            } else {
                ce["t"] = "1";
            }
            counterexamples.push_back(std::move(ce));
        }
    }
    json doc{{"command", "hypothesis"},
             {"results", json{{"max_branches", max_branches},
                              {"max_k", max_k},
                              {"graphs_swept", swept},
                              {"max_residual", max_residual},
                              {"counterexample_threshold", threshold},
                              {"counterexamples", counterexamples},
                              {"precision", ctx.precision_text}}}};
    return emit(ctx, std::move(doc), "reported");
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

int cmd_orbit(const Context& ctx, const StarGraph& g, const std::string& start, int steps,
              const std::string& t_choice) {
    if (classify(g).kind != GraphKind::Hyperbolic)
        throw UsageError("orbit needs a hyperbolic graph; " + g.to_string() + " is not");
    if (steps < 0) throw UsageError("--steps must be non-negative");
    PositiveRoots roots = solve_positive_roots(g, ctx.solver_width());
    const RootEnclosure& enc = (t_choice == "t1") ? roots.t1 : roots.t2;
    const double t = enc.value();
    const StartPart part = (start == "odd") ? StartPart::OddPart : StartPart::EvenPart;

    json rows = json::array();
    ParityPair<double> pair = parity_start(part, t);
    Step next = (part == StartPart::OddPart) ? Step::Even : Step::Odd;
    double final_distance = -1;
    for (int s = 0; s <= steps; ++s) {
        if (s > 0) {
            pair = parity_step(pair, next, t);
            next = (next == Step::Even) ? Step::Odd : Step::Even;
        }
        OrbitVariant variant{part, s % 2 == 1};
        json row{{"step", s}, {"odd_coeff", pair.odd_coeff}, {"even_coeff", pair.even_coeff}};
        if (pair.odd_coeff != 0.0) {
            ParityPair<double> norm = normalize(pair);
            ParityPair<double> target = limit_target(variant, t);
            double dist = std::abs(norm.even_coeff - target.even_coeff);
            row["normalized_even"] = norm.even_coeff;
            row["target_even"] = target.even_coeff;
            row["distance"] = dist;
            final_distance = dist;
        }
        rows.push_back(std::move(row));
    }
    json doc{{"command", "orbit"},
             {"graph", graph_json(g)},
             {"results", json{{"start", start},
                              {"t_choice", t_choice},
                              {"t", enclosure_json(enc)},
                              {"steps", rows},
                              {"final_distance", final_distance},
                              {"precision", ctx.precision_text}}}};
    return emit(ctx, std::move(doc), "reported");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact star-shaped graph characters, reflection functors, and certificates"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format/--precision appear after the subcommand

    Context ctx;
    std::string precision_text = "1e-10";
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--precision", precision_text, "decimal precision for numeric results")->capture_default_str();

    std::string branches_text;
    auto* c_classify = app.add_subcommand("classify", "classify a star graph and isolate the graph-equation roots");
    c_classify->add_option("--branches", branches_text, "comma-separated branch lengths")->required();

    std::string verify_branches, which;
    int max_j = 10;
    auto* c_verify = app.add_subcommand("verify", "verify an identity suite exactly or numerically");
    c_verify->add_option("--branches", verify_branches)->required();
    c_verify->add_option("--which", which, "identity to check")
        ->check(CLI::IsMember({"ts-eigen", "gamma", "eq5", "prop5", "rho", "limits", "sigma"}))
        ->required();
    c_verify->add_option("--max-j", max_j, "iteration depth for prop5");

    std::string certify_branches;
    bool all_minimal = false;
    auto* c_certify = app.add_subcommand("certify", "run the irreducibility / rational-span certification");
    c_certify->add_option("--branches", certify_branches);
    c_certify->add_flag("--all-minimal", all_minimal, "certify all five minimal hyperbolic graphs");

    int max_branches = 5, max_k = 4;
    auto* c_hypothesis = app.add_subcommand("hypothesis", "sweep t + 1/t + 2 = r^2 over non-Dynkin graphs");
    c_hypothesis->add_option("--max-branches", max_branches)->capture_default_str();
    c_hypothesis->add_option("--max-k", max_k)->capture_default_str();

    std::string orbit_branches, orbit_start = "odd", t_choice = "t2";
    int steps = 40;
    auto* c_orbit = app.add_subcommand("orbit", "iterate the Coxeter orbit of an odd/even part");
    c_orbit->add_option("--branches", orbit_branches)->required();
    c_orbit->add_option("--start", orbit_start)->check(CLI::IsMember({"odd", "even"}))->capture_default_str();
    c_orbit->add_option("--steps", steps)->capture_default_str();
    c_orbit->add_option("--t-choice", t_choice)->check(CLI::IsMember({"t1", "t2"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        ctx.precision = parse_decimal(precision_text);
        if (ctx.precision <= 0) throw UsageError("precision must be positive");
        ctx.precision_text = precision_text;

        if (c_classify->parsed()) return cmd_classify(ctx, StarGraph(parse_branches(branches_text)));
        if (c_verify->parsed()) return cmd_verify(ctx, StarGraph(parse_branches(verify_branches)), which, max_j);
        if (c_certify->parsed()) {
            std::optional<StarGraph> g;
            if (!certify_branches.empty()) g = StarGraph(parse_branches(certify_branches));
            return cmd_certify(ctx, g, all_minimal);
        }
        if (c_hypothesis->parsed()) return cmd_hypothesis(ctx, max_branches, max_k);
        if (c_orbit->parsed())
            return cmd_orbit(ctx, StarGraph(parse_branches(orbit_branches)), orbit_start, steps, t_choice);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
