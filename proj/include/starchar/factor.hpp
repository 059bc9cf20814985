#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "starchar/polynomial.hpp"
#include "starchar/rational.hpp"

namespace starchar {

/// Complete factorization is guaranteed up to this degree; beyond it the
/// caller gets a recoverable error instead of an open-ended computation.
inline constexpr int kMaxFactorizationDegree = 32;

struct FactorizationLimitError : std::runtime_error {
    explicit FactorizationLimitError(int deg)
        : std::runtime_error("polynomial degree " + std::to_string(deg) +
                             " exceeds the supported factorization bound " +
                             std::to_string(kMaxFactorizationDegree)),
          degree(deg) {}
    int degree;
};

namespace detail {

// ---------------------------------------------------------------------------
// Integer polynomials: dense ascending coefficients, trailing zeros trimmed.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Integer>;

inline void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Integer z_content(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly z_primitive(ZPoly a) {
    z_trim(a);
    if (a.empty()) return a;
    Integer g = z_content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

/// Exact division test over Z: returns a/b when b divides a, nullopt else.
inline std::optional<ZPoly> z_divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    ZPoly r = a;
    z_trim(r);
    if (r.empty()) return ZPoly{};
    if (z_deg(r) < z_deg(b)) return std::nullopt;
    ZPoly q(static_cast<std::size_t>(z_deg(r) - z_deg(b)) + 1);
    while (!r.empty() && z_deg(r) >= z_deg(b)) {
        Integer qc = r.back() / b.back();
        if (qc * b.back() != r.back()) return std::nullopt;
        int shift = z_deg(r) - z_deg(b);
        q[static_cast<std::size_t>(shift)] = qc;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(shift)] -= qc * b[i];
        z_trim(r);
    }
    if (!r.empty()) return std::nullopt;
    return q;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, p a small prime. Coefficients live in [0, p).
// ---------------------------------------------------------------------------

using MPoly = std::vector<std::int64_t>;

inline void mp_trim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mp_deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid on machine ints; p prime, a != 0 mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

inline MPoly mp_sub(const MPoly& a, const MPoly& b, std::int64_t p) {
    MPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
        c[i] = ((av - bv) % p + p) % p;
    }
    mp_trim(c);
    return c;
}

inline MPoly mp_mul(const MPoly& a, const MPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    mp_trim(c);
    return c;
}

inline std::pair<MPoly, MPoly> mp_divmod(const MPoly& a, const MPoly& b, std::int64_t p) {
    MPoly r = a, q;
    mp_trim(r);
    if (mp_deg(r) >= mp_deg(b)) q.assign(static_cast<std::size_t>(mp_deg(r) - mp_deg(b)) + 1, 0);
    std::int64_t li = inv_mod(b.back(), p);
    while (!r.empty() && mp_deg(r) >= mp_deg(b)) {
        std::int64_t f = r.back() * li % p;
        int shift = mp_deg(r) - mp_deg(b);
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i + static_cast<std::size_t>(shift)] = ((r[i + static_cast<std::size_t>(shift)] - f * b[i]) % p + p) % p;
        mp_trim(r);
    }
    return {std::move(q), std::move(r)};
}

inline MPoly mp_monic(MPoly a, std::int64_t p) {
    mp_trim(a);
    if (a.empty()) return a;
    std::int64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = c * li % p;
    return a;
}

inline MPoly mp_gcd(MPoly a, MPoly b, std::int64_t p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        MPoly r = mp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(std::move(a), p);
}

/// Extended Euclid: returns (s, t) with s*a + t*b = 1 mod p; a, b coprime.
inline std::pair<MPoly, MPoly> mp_bezout(const MPoly& a, const MPoly& b, std::int64_t p) {
    MPoly r0 = a, r1 = b;
    MPoly s0{1}, s1{}, t0{}, t1{1};
    mp_trim(r0);
    mp_trim(r1);
    while (!r1.empty()) {
        auto [q, r2] = mp_divmod(r0, r1, p);
        MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (mp_deg(r0) != 0) throw std::logic_error("bezout: inputs not coprime mod p");
    std::int64_t li = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * li % p;
    for (auto& c : t0) c = c * li % p;
    return {std::move(s0), std::move(t0)};
}

inline MPoly mp_derivative(const MPoly& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    MPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
    mp_trim(d);
    return d;
}

inline MPoly z_reduce(const ZPoly& a, std::int64_t p) {
    MPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ((a[i] % p).convert_to<std::int64_t>() + p) % p;
    mp_trim(r);
    return r;
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial over F_p.
// ---------------------------------------------------------------------------

/// Dimension of the Berlekamp subalgebra = number of irreducible factors.
inline int berlekamp_factor_count(const MPoly& f, std::int64_t p, std::vector<MPoly>* basis_out = nullptr) {
    const int d = mp_deg(f);
    // rows of Q: coefficients of x^{p*i} mod f
    MPoly xp{0, 1};
    {   // x^p mod f by binary powering
        MPoly base{0, 1}, acc{1};
        std::int64_t e = p;
        while (e > 0) {
            if (e & 1) acc = mp_divmod(mp_mul(acc, base, p), f, p).second;
            base = mp_divmod(mp_mul(base, base, p), f, p).second;
            e >>= 1;
        }
        xp = std::move(acc);
    }
    std::vector<MPoly> rows(static_cast<std::size_t>(d));
    rows[0] = MPoly{1};
    for (int i = 1; i < d; ++i) rows[static_cast<std::size_t>(i)] = mp_divmod(mp_mul(rows[static_cast<std::size_t>(i - 1)], xp, p), f, p).second;

    // A = (Q - I)^T as a d x d grid; null space of A = Berlekamp subalgebra.
    std::vector<std::vector<std::int64_t>> A(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const MPoly& ri = rows[static_cast<std::size_t>(i)];
            std::int64_t q = j < static_cast<int>(ri.size()) ? ri[static_cast<std::size_t>(j)] : 0;
            if (i == j) q = ((q - 1) % p + p) % p;
            A[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = q;
        }

    // Gauss-Jordan; record pivot columns, then read off the null space.
    std::vector<int> pivot_col(static_cast<std::size_t>(d), -1);
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int sel = -1;
        for (int row = rank; row < d; ++row)
            if (A[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(A[static_cast<std::size_t>(sel)], A[static_cast<std::size_t>(rank)]);
        std::int64_t li = inv_mod(A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < d; ++j) A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] = A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * li % p;
        for (int row = 0; row < d; ++row) {
            if (row == rank) continue;
            std::int64_t f2 = A[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f2 == 0) continue;
            for (int j = 0; j < d; ++j)
                A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    ((A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] - f2 * A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % p + p) % p;
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    if (basis_out) {
        basis_out->clear();
        std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
        for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = true;
        for (int free_col = 0; free_col < d; ++free_col) {
            if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
            MPoly v(static_cast<std::size_t>(d), 0);
            v[static_cast<std::size_t>(free_col)] = 1;
            for (int r = 0; r < rank; ++r) {
                std::int64_t val = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];
                v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = (p - val) % p;
            }
            mp_trim(v);
            basis_out->push_back(std::move(v));
        }
    }
    return d - rank;
}

/// All monic irreducible factors of a monic squarefree f over F_p.
inline std::vector<MPoly> berlekamp_factor(const MPoly& f, std::int64_t p) {
    if (mp_deg(f) <= 1) return {f};
    std::vector<MPoly> basis;
    int r = berlekamp_factor_count(f, p, &basis);
    std::vector<MPoly> factors{f};
    if (r == 1) return factors;
    for (const MPoly& v : basis) {
        if (static_cast<int>(factors.size()) == r) break;
        if (mp_deg(v) < 1) continue;  // the constants never split anything
        for (std::int64_t s = 0; s < p && static_cast<int>(factors.size()) < r; ++s) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (mp_deg(factors[i]) <= 1) continue;
                MPoly vs = mp_sub(mp_divmod(v, factors[i], p).second, MPoly{s}, p);
                if (vs.empty()) continue;
                MPoly g = mp_gcd(factors[i], vs, p);
                if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(factors[i])) {
                    MPoly rest = mp_divmod(factors[i], g, p).first;
                    factors[i] = std::move(g);
                    factors.push_back(mp_monic(std::move(rest), p));
                }
            }
        }
    }
    if (static_cast<int>(factors.size()) != r) throw std::logic_error("berlekamp splitting incomplete");
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting: from a factorization mod p to mod p^l.
// Coefficients are canonical representatives in [0, m).
// ---------------------------------------------------------------------------

inline ZPoly zm_reduce(ZPoly a, const Integer& m) {
    for (auto& c : a) { c %= m; if (c < 0) c += m; }
    z_trim(a);
    return a;
}

inline ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) { return zm_reduce(z_mul(a, b), m); }

inline ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer av = i < a.size() ? a[i] : Integer(0), bv = i < b.size() ? b[i] : Integer(0);
        c[i] = av - bv;
    }
    return zm_reduce(std::move(c), m);
}

inline ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer av = i < a.size() ? a[i] : Integer(0), bv = i < b.size() ? b[i] : Integer(0);
        c[i] = av + bv;
    }
    return zm_reduce(std::move(c), m);
}

/// Division by a monic divisor, everything mod m.
inline std::pair<ZPoly, ZPoly> zm_divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r = a, q;
    z_trim(r);
    if (z_deg(r) >= z_deg(b)) q.assign(static_cast<std::size_t>(z_deg(r) - z_deg(b)) + 1, Integer(0));
    while (!r.empty() && z_deg(r) >= z_deg(b)) {
        Integer f = r.back();
        int shift = z_deg(r) - z_deg(b);
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            Integer& c = r[i + static_cast<std::size_t>(shift)];
            c = (c - f * b[i]) % m;
            if (c < 0) c += m;
        }
        z_trim(r);
    }
    return {std::move(q), std::move(r)};
}

inline ZPoly mp_to_z(const MPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

/// One quadratic Hensel step: (g, h, s, t) valid mod m -> valid mod m^2,
/// with f = g*h mod m^2, s*g + t*h = 1 mod m^2, h monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
    const Integer m2 = m * m;
    ZPoly e = zm_sub(zm_reduce(f, m2), zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZPoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZPoly h1 = zm_add(h, r, m2);
    ZPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h1, m2);
    s = zm_sub(s, d, m2);
    t = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g1, m2), m2);
    if (z_deg(g1) != z_deg(g) || z_deg(h1) != z_deg(h)) throw std::logic_error("hensel step degree drift");
    g = std::move(g1);
    h = std::move(h1);
}

inline Integer int_pow(Integer b, unsigned e) {
    Integer r = 1;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

/// Lifts f = lc(f) * prod(modular factors) from mod p to mod `target` (a
/// power of p), returning monic factors mod target. Binary-splitting tree.
inline std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<MPoly>& factors, std::int64_t p,
                                          const Integer& target) {
    if (factors.size() == 1) {
        // monic image of f mod target: multiply by lc(f)^{-1}
        Integer lc = f.back() % target;
        if (lc < 0) lc += target;
        // modular inverse via extended Euclid on Integers
        Integer t0 = 0, t1 = 1, r0 = target, r1 = lc;
        while (r1 != 0) {
            Integer q = r0 / r1;
            Integer tmp = t0 - q * t1; t0 = t1; t1 = tmp;
            tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        }
        if (r0 != 1) throw std::logic_error("leading coefficient not invertible in hensel base");
        Integer li = t0 % target;
        if (li < 0) li += target;
        ZPoly out = f;
        for (auto& c : out) { c = c * li % target; if (c < 0) c += target; }
        z_trim(out);
        return {out};
    }
    const std::size_t k = factors.size() / 2;
    MPoly gh{1}, hh{1};
    for (std::size_t i = 0; i < k; ++i) gh = mp_mul(gh, factors[i], p);
    for (std::size_t i = k; i < factors.size(); ++i) hh = mp_mul(hh, factors[i], p);
    std::int64_t lcp = ((f.back() % p).convert_to<std::int64_t>() + p) % p;
    for (auto& c : gh) c = c * lcp % p;
    auto [s0, t0] = mp_bezout(gh, hh, p);

    ZPoly g = mp_to_z(gh), h = mp_to_z(hh), s = mp_to_z(s0), t = mp_to_z(t0);
    Integer m = p;
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    g = zm_reduce(std::move(g), target);
    h = zm_reduce(std::move(h), target);

    std::vector<MPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<MPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(k), factors.end());
    std::vector<ZPoly> out = hensel_lift_all(g, left, p, target);
    std::vector<ZPoly> out2 = hensel_lift_all(h, right, p, target);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus: primitive squarefree integer polynomials.
// ---------------------------------------------------------------------------

inline const std::int64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                       41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

inline ZPoly zm_symmetric(ZPoly a, const Integer& m) {
    const Integer half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    z_trim(a);
    return a;
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree polynomial of degree >= 1.
inline std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& g) {
    const int d = z_deg(g);
    if (d == 1) return {g};

    // Prime selection: degree preserved and image squarefree; among the
    // first few usable primes keep the one with the fewest modular factors.
    std::int64_t best_p = 0;
    int best_count = d + 1;
    int tried = 0;
    for (std::int64_t p : kPrimes) {
        if (g.back() % p == 0) continue;
        MPoly fp = mp_monic(z_reduce(g, p), p);
        if (mp_deg(fp) != d) continue;
        if (mp_deg(mp_gcd(fp, mp_derivative(fp, p), p)) != 0) continue;
        int cnt = berlekamp_factor_count(fp, p);
        if (cnt < best_count) {
            best_count = cnt;
            best_p = p;
        }
        if (++tried >= 4 || best_count == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no usable prime found for factorization");
    if (best_count == 1) return {g};

    const std::int64_t p = best_p;
    std::vector<MPoly> modular = berlekamp_factor(mp_monic(z_reduce(g, p), p), p);
    std::sort(modular.begin(), modular.end(),
              [](const MPoly& a, const MPoly& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

    // Landau-Mignotte style coefficient bound for any factor times lc(g).
    Integer norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    Integer bound = (boost::multiprecision::sqrt(norm2) + 1) * int_pow(Integer(2), static_cast<unsigned>(d)) *
                    boost::multiprecision::abs(g.back());
    Integer target = p;
    while (target < 2 * bound + 1) target *= p;

    std::vector<ZPoly> lifted = hensel_lift_all(g, modular, p, target);

    // Subset recombination against the shrinking remainder polynomial.
    std::vector<ZPoly> result;
    ZPoly h = g;
    std::vector<std::size_t> active(lifted.size());
    std::iota(active.begin(), active.end(), 0u);
    std::size_t take = 1;
    while (2 * take <= active.size()) {
        // enumerate index combinations of size `take`
        std::vector<std::size_t> idx(take);
        std::iota(idx.begin(), idx.end(), 0u);
        bool split = false;
        while (true) {
            ZPoly cand{h.back()};
            for (std::size_t i : idx) cand = zm_mul(cand, lifted[active[i]], target);
            cand = z_primitive(zm_symmetric(std::move(cand), target));
            if (z_deg(cand) >= 1) {
                if (auto quo = z_divide_exact(h, cand)) {
                    result.push_back(cand);
                    h = z_primitive(std::move(*quo));
                    std::vector<std::size_t> next_active;
                    for (std::size_t i = 0; i < active.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) next_active.push_back(active[i]);
                    active = std::move(next_active);
                    split = true;
                    break;
                }
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == active.size() - take + static_cast<std::size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!split) ++take;
    }
    if (z_deg(h) >= 1) result.push_back(z_primitive(std::move(h)));
    return result;
}

/// RatPoly -> primitive integer polynomial (content dropped).
inline ZPoly to_primitive_int(const RatPoly& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
    ZPoly z(p.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Rational& c = p.coeffs()[i];
        z[i] = numerator(c) * (den / denominator(c));
    }
    return z_primitive(std::move(z));
}

inline RatPoly to_monic_ratpoly(const ZPoly& z) {
    std::vector<Rational> c(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i], z.back());
    return RatPoly(std::move(c));
}

}  // namespace detail

/// Complete factorization over Q: returns monic irreducible factors with
/// multiplicities; the product times a rational constant reproduces the
/// input. Exact for any degree up to kMaxFactorizationDegree.
inline std::vector<std::pair<RatPoly, int>> factor_over_rationals(const RatPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("cannot factor a constant polynomial");
    if (p.degree() > kMaxFactorizationDegree) throw FactorizationLimitError(p.degree());

    // Yun's squarefree decomposition: p = const * prod a_i^i, a_i squarefree
    // and pairwise coprime.
    std::vector<std::pair<RatPoly, int>> squarefree;
    {
        RatPoly f = p.monic();
        RatPoly fp = f.derivative();
        RatPoly u = poly_gcd(f, fp);
        RatPoly b = f / u;
        RatPoly c = fp / u;
        RatPoly d = c - b.derivative();
        int i = 1;
        while (b.degree() > 0) {
            RatPoly a = poly_gcd(b, d);
            if (a.degree() > 0) squarefree.emplace_back(a, i);
            b = b / a;
            c = d / a;
            d = c - b.derivative();
            ++i;
        }
    }

    std::vector<std::pair<RatPoly, int>> out;
    for (const auto& [sqf, mult] : squarefree) {
        for (const auto& z : detail::zassenhaus_squarefree(detail::to_primitive_int(sqf)))
            out.emplace_back(detail::to_monic_ratpoly(z), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

}  // namespace starchar
