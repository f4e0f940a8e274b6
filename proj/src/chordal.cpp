#include <chordnet/chordal.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chordnet {

void Graph::add_edge(std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    auto insert = [](std::vector<std::uint32_t>& v, std::uint32_t x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it == v.end() || *it != x) v.insert(it, x);
    };
    insert(adj_.at(a), b);
    insert(adj_.at(b), a);
}

bool Graph::has_edge(std::uint32_t a, std::uint32_t b) const {
    const auto& v = adj_.at(a);
    return std::binary_search(v.begin(), v.end(), b);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < adj_.size(); ++a)
        for (std::uint32_t b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t s = 0;
    for (const auto& v : adj_) s += v.size();
    return s / 2;
}

std::vector<std::vector<std::uint32_t>> ChordalStructure::children() const {
    std::vector<std::vector<std::uint32_t>> ch(parent.size());
    for (std::uint32_t l = 0; l < parent.size(); ++l)
        if (parent[l] >= 0) ch[static_cast<std::size_t>(parent[l])].push_back(l);
    return ch;
}

std::size_t ChordalStructure::clique_number() const {
    std::size_t k = 0;
    for (const auto& X : cliques) k = std::max(k, X.size());
    return k;
}

Graph support_graph(const std::vector<Poly>& F, std::size_t n) {
    Graph g(n);
    for (const Poly& f : F) {
        auto vs = f.vars();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    }
    return g;
}

std::vector<std::uint32_t> identity_order(std::size_t n) {
    std::vector<std::uint32_t> o(n);
    std::iota(o.begin(), o.end(), 0U);
    return o;
}

std::vector<std::uint32_t> invert_order(const std::vector<std::uint32_t>& order) {
    std::vector<std::uint32_t> inv(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) inv.at(order[i]) = i;
    return inv;
}

ChordalStructure complete_with_order(const Graph& g, const std::vector<std::uint32_t>& order) {
    const std::size_t n = g.size();
    if (order.size() != n) throw std::invalid_argument("order length differs from vertex count");
    std::vector<bool> seen(n, false);
    for (std::uint32_t v : order) {
        if (v >= n || seen[v]) throw std::invalid_argument("order is not a permutation");
        seen[v] = true;
    }
    const auto pos = invert_order(order);

    ChordalStructure cs;
    cs.order = order;
    cs.g = Graph(n);
    for (auto [a, b] : g.edges()) cs.g.add_edge(pos[a], pos[b]);

    // Eliminating x_l connects all of its remaining (smaller) neighbors.
    for (std::uint32_t l = 0; l < n; ++l) {
        std::vector<std::uint32_t> later;
        for (std::uint32_t u : cs.g.neighbors(l))
            if (u > l) later.push_back(u);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j) cs.g.add_edge(later[i], later[j]);
    }
    cs.cliques.resize(n);
    for (std::uint32_t l = 0; l < n; ++l) {
        cs.cliques[l].push_back(l);
        for (std::uint32_t u : cs.g.neighbors(l))
            if (u > l) cs.cliques[l].push_back(u);
    }
    cs.parent = elim_tree(cs);
    return cs;
}

std::vector<int> elim_tree(const ChordalStructure& cs) {
    const std::size_t n = cs.g.size();
    std::vector<int> parent(n, -1);
    for (std::uint32_t l = 0; l < n; ++l) {
        int best = -1;
        for (std::uint32_t u : cs.g.neighbors(l))
            if (u > l) {
                best = static_cast<int>(u);
                break;
            }
        // Vertices without smaller neighbors hang off the next vertex so the
        // forest becomes a single tree.
        if (best < 0 && l + 1 < n) best = static_cast<int>(l + 1);
        parent[l] = best;
    }
    return parent;
}

std::vector<std::uint32_t> suggest_order(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::set<std::uint32_t>> adj(n);
    for (auto [a, b] : g.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<bool> done(n, false);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::uint32_t best = 0;
        std::size_t best_deg = SIZE_MAX;
        for (std::uint32_t v = 0; v < n; ++v)
            if (!done[v] && adj[v].size() < best_deg) {
                best = v;
                best_deg = adj[v].size();
            }
        done[best] = true;
        order.push_back(best);
        std::vector<std::uint32_t> nb(adj[best].begin(), adj[best].end());
        for (std::uint32_t u : nb) adj[u].erase(best);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        adj[best].clear();
    }
    return order;
}

bool is_perfect_elimination(const Graph& g) {
    for (std::uint32_t l = 0; l < g.size(); ++l) {
        std::vector<std::uint32_t> later;
        for (std::uint32_t u : g.neighbors(l))
            if (u > l) later.push_back(u);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.has_edge(later[i], later[j])) return false;
    }
    return true;
}

} // namespace chordnet
