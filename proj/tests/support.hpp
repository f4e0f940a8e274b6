#pragma once

#include <chordnet/io.hpp>
#include <chordnet/queries.hpp>

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace chordnet;

inline std::string fixture(const std::string& name) { return std::string(CHORDNET_FIXTURES) + "/" + name; }

inline Poly P(const Ring& R, const std::string& s) { return parse_poly(s, R); }

inline std::vector<Poly> Ps(const Ring& R, std::initializer_list<const char*> xs) {
    std::vector<Poly> out;
    for (const char* x : xs) out.push_back(parse_poly(x, R));
    return out;
}

// Every point of GF(p)^n, in lexicographic order.
inline std::vector<std::vector<Coeff>> all_points(const Ring& R) {
    std::vector<std::vector<Coeff>> out;
    std::vector<Coeff> x(R.n, 0);
    for (;;) {
        out.push_back(x);
        std::size_t i = 0;
        while (i < R.n && ++x[i] == R.p) x[i++] = 0;
        if (i == R.n) break;
    }
    return out;
}

inline bool satisfies(const PolySystem& s, const std::vector<Coeff>& x) {
    for (const Poly& f : s.eqs)
        if (f.evaluate(x) != 0) return false;
    for (const Poly& h : s.ineqs)
        if (h.evaluate(x) == 0) return false;
    return true;
}

inline std::vector<std::vector<Coeff>> brute_points(const Ring& R, const PolySystem& s) {
    std::vector<std::vector<Coeff>> out;
    for (const auto& x : all_points(R))
        if (satisfies(s, x)) out.push_back(x);
    return out;
}

// Point -> number of chains containing it.
inline std::map<std::vector<Coeff>, int> chain_points(const ChordalNetwork& net) {
    std::map<std::vector<Coeff>, int> hits;
    const auto pts = all_points(net.ring);
    for_each_chain(net, [&](const Chain& c) {
        const PolySystem s = chain_system(net, c);
        for (const auto& x : pts)
            if (satisfies(s, x)) ++hits[x];
        return true;
    });
    return hits;
}

inline Poly random_poly(const Ring& R, std::mt19937_64& rng, const std::vector<std::uint32_t>& vars,
                        std::size_t terms, std::uint32_t maxdeg) {
    std::uniform_int_distribution<Coeff> coef(1, R.p - 1);
    std::uniform_int_distribution<std::uint32_t> deg(0, maxdeg);
    std::vector<Term> ts;
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<VarPow> vp;
        for (std::uint32_t v : vars)
            if (std::uint32_t e = deg(rng)) vp.push_back({v, e});
        ts.push_back({Monomial::from_pairs(std::move(vp)), coef(rng)});
    }
    return Poly(R, std::move(ts));
}

inline std::vector<std::uint32_t> all_vars(const Ring& R) { return identity_order(R.n); }

// x_i^q - 1 per vertex and (x_i^q - x_j^q)/(x_i - x_j) per edge.
inline std::vector<Poly> coloring_system(const Ring& R, std::uint32_t q,
                                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    std::vector<Poly> F;
    for (std::uint32_t i = 0; i < R.n; ++i) F.push_back(Poly::variable(R, i, q) - Poly::constant(R, 1));
    for (auto [i, j] : edges) {
        Poly e(R);
        for (std::uint32_t a = 0; a < q; ++a) e += Poly::variable(R, i, a) * Poly::variable(R, j, q - 1 - a);
        F.push_back(e);
    }
    return F;
}

inline ChordalNetwork build(const std::vector<Poly>& F, Backend b, bool squarefree, bool strip = false) {
    TriangularizeOptions opt;
    opt.backend = b;
    opt.squarefree = squarefree;
    opt.strip = strip;
    opt.threads = 1;
    return triangularize_problem(F, identity_order(F.front().ring().n), opt);
}

inline std::vector<std::string> chain_strings(const ChordalNetwork& net) {
    std::vector<std::string> out;
    for_each_chain(net, [&](const Chain& c) {
        std::string s;
        for (const Poly& f : chain_system(net, c).eqs) s += (s.empty() ? "" : ", ") + f.str();
        out.push_back("(" + s + ")");
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_edges(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return e;
}

// Adjacent 2x2 minors of a 2 x n matrix whose columns are (x_{2i}, x_{2i+1}).
inline std::vector<Poly> minors_2xn(std::size_t n) {
    const Ring R = make_ring(2 * n, 65521);
    std::vector<Poly> F;
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        F.push_back(Poly::variable(R, 2 * i) * Poly::variable(R, 2 * i + 3) -
                    Poly::variable(R, 2 * i + 1) * Poly::variable(R, 2 * i + 2));
    return F;
}

// True when every point of V(F) lies on exactly one chain and no other
// point lies on any chain.
inline bool exact_cover(const ChordalNetwork& net, const std::vector<Poly>& F) {
    const auto hits = chain_points(net);
    const auto truth = brute_points(net.ring, {F, {}});
    if (hits.size() != truth.size()) return false;
    for (const auto& x : truth) {
        auto it = hits.find(x);
        if (it == hits.end() || it->second != 1) return false;
    }
    return true;
}

// Field equations plus a few random polynomials in at most two variables.
inline std::vector<Poly> random_field_system(const Ring& R, std::mt19937_64& rng, int extra) {
    std::vector<Poly> F;
    for (std::uint32_t i = 0; i < R.n; ++i) F.push_back(Poly::variable(R, i, R.p) - Poly::variable(R, i));
    for (int k = 0; k < extra; ++k) {
        const std::uint32_t a = rng() % R.n, b = rng() % R.n;
        std::vector<std::uint32_t> vs{a};
        if (b != a) vs.push_back(b);
        F.push_back(random_poly(R, rng, vs, 2, 2));
    }
    return F;
}

// A consistent zero-dimensional system whose solutions lie on a small grid,
// so the truth can be enumerated without scanning GF(p)^n.
struct GridSystem {
    std::vector<Poly> F;
    std::vector<std::vector<Coeff>> grid;
};

inline GridSystem grid_system(const Ring& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<Coeff> d(0, R.p - 1);
    GridSystem g;
    for (std::uint32_t i = 0; i < R.n; ++i) {
        const std::vector<Coeff> r{d(rng), d(rng)};
        const Poly x = Poly::variable(R, i);
        g.F.push_back((x - Poly::constant(R, r[0])) * (x - Poly::constant(R, r[1])));
        g.grid.push_back(r);
    }
    // Extra equations vanish at one grid point so the system stays consistent.
    std::vector<Coeff> anchor(R.n);
    for (std::uint32_t i = 0; i < R.n; ++i) anchor[i] = g.grid[i][rng() % 2];
    for (int k = 0; k < 2; ++k) {
        const std::uint32_t a = rng() % R.n, b = rng() % R.n;
        std::vector<std::uint32_t> vs{a};
        if (a != b) vs.push_back(b);
        const Poly f = random_poly(R, rng, vs, 2, 1);
        g.F.push_back(f - Poly::constant(R, f.evaluate(anchor)));
    }
    return g;
}

inline std::vector<std::vector<Coeff>> grid_solutions(const GridSystem& g) {
    std::vector<std::vector<Coeff>> out;
    std::vector<Coeff> x(g.grid.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            if (satisfies({g.F, {}}, x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
            return;
        }
        for (Coeff c : g.grid[i]) {
            x[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// A random element of the ideal. Multipliers use only each generator's own
// variables so every term stays supported on the chordal structure.
inline Poly random_ideal_element(const std::vector<Poly>& F, std::mt19937_64& rng) {
    const Ring& R = F.front().ring();
    Poly h(R);
    for (const Poly& f : F) {
        const auto vs = f.vars();
        h += random_poly(R, rng, std::vector<std::uint32_t>(vs.begin(), vs.end()), 2, 1) * f;
    }
    return h;
}

} // namespace testing_support
