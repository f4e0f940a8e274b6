#pragma once

#include <chordnet/ring.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace chordnet {

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t size() const noexcept { return adj_.size(); }
    void add_edge(std::uint32_t a, std::uint32_t b);
    bool has_edge(std::uint32_t a, std::uint32_t b) const;
    // Sorted neighbor list.
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_.at(v); }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
    std::size_t edge_count() const;

private:
    std::vector<std::vector<std::uint32_t>> adj_;
};

// A chordal completion, relabeled so that the perfect elimination ordering
// is x0, x1, ..., x(n-1).
struct ChordalStructure {
    Graph g;
    // order[i] is the input vertex that became x_i.
    std::vector<std::uint32_t> order;
    // X_l = {l} together with the neighbors of l of larger index, sorted.
    std::vector<std::vector<std::uint32_t>> cliques;
    // Elimination tree; the root (x(n-1)) has parent -1.
    std::vector<int> parent;

    std::size_t size() const noexcept { return parent.size(); }
    std::vector<std::vector<std::uint32_t>> children() const;
    std::size_t clique_number() const;
};

Graph support_graph(const std::vector<Poly>& F, std::size_t n);
ChordalStructure complete_with_order(const Graph& g, const std::vector<std::uint32_t>& order);
std::vector<std::uint32_t> suggest_order(const Graph& g);
std::vector<int> elim_tree(const ChordalStructure& cs);

std::vector<std::uint32_t> identity_order(std::size_t n);
bool is_perfect_elimination(const Graph& g);
// Inverse permutation: result[order[i]] = i.
std::vector<std::uint32_t> invert_order(const std::vector<std::uint32_t>& order);

} // namespace chordnet
