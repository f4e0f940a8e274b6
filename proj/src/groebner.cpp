#include <chordnet/ring.hpp>

#include <algorithm>
#include <set>

namespace chordnet {

namespace {

struct Pair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
};

struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
        if (auto c = a.lcm <=> b.lcm; c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

Poly s_poly(const Poly& f, const Poly& g, const Monomial& l) {
    // Both operands are monic, so the leading terms cancel directly.
    return f.mul_term(l.quotient(f.lead_monomial()), 1) - g.mul_term(l.quotient(g.lead_monomial()), 1);
}

std::vector<Poly> interreduce(std::vector<Poly> G) {
    std::sort(G.begin(), G.end(), [](const Poly& a, const Poly& b) { return a.lead_monomial() < b.lead_monomial(); });
    std::vector<Poly> minimal;
    for (const Poly& g : G) {
        bool redundant = false;
        for (const Poly& h : minimal)
            if (h.lead_monomial().divides(g.lead_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Poly> others;
        for (std::size_t m = 0; m < minimal.size(); ++m)
            if (m != k) others.push_back(minimal[m]);
        out.push_back(normal_form(minimal[k], others).monic());
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.lead_monomial() > b.lead_monomial(); });
    return out;
}

} // namespace

std::vector<Poly> buchberger_lex(const std::vector<Poly>& F, const GroebnerOptions& opt) {
    if (F.empty()) return {};
    const Ring R = F.front().ring();
    const std::vector<Poly> unit{Poly::constant(R, 1)};

    std::vector<Poly> G;
    std::set<Pair, PairOrder> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::size_t created = 0;

    auto add = [&](Poly f) -> bool {
        f = f.monic();
        if (f.is_constant()) return false;
        const std::size_t idx = G.size();
        G.push_back(std::move(f));
        for (std::size_t k = 0; k < idx; ++k) {
            if (++created > opt.pair_budget)
                throw BudgetExceeded("S-pair budget of " + std::to_string(opt.pair_budget) + " exhausted");
            queue.insert({lcm(G[k].lead_monomial(), G[idx].lead_monomial()), k, idx});
            pending.insert({k, idx});
        }
        return true;
    };

    for (const Poly& f : F) {
        if (f.is_zero()) continue;
        Poly r = normal_form(f, G);
        if (r.is_zero()) continue;
        if (!add(r)) return unit;
    }
    if (G.empty()) return {};

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});
        const Poly& gi = G[pr.i];
        const Poly& gj = G[pr.j];
        // First criterion: coprime leading monomials reduce to zero.
        if (gi.lead_monomial().coprime(gj.lead_monomial())) continue;
        // Second criterion: some g_k with lm(g_k) | lcm whose pairs with
        // both ends are already treated.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].lead_monomial().divides(pr.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;
        Poly r = normal_form(s_poly(gi, gj, pr.lcm), G);
        if (r.is_zero()) continue;
        if (!add(r)) return unit;
    }
    return interreduce(std::move(G));
}

} // namespace chordnet
