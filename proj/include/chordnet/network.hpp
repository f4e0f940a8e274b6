#pragma once

#include <chordnet/chordal.hpp>
#include <chordnet/decomp.hpp>
#include <chordnet/ring.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chordnet {

using BigInt = boost::multiprecision::cpp_int;

enum class Backend { Auto, ZeroDim, Monomial, Binomial };
const char* to_string(Backend b);
Backend backend_from_string(const std::string& s);

struct Node {
    std::uint32_t id;
    std::uint32_t rank;
    PolySystem content;
};

// One node id per rank.
using Chain = std::vector<std::uint32_t>;

class ChordalNetwork {
public:
    ChordalNetwork() = default;
    ChordalNetwork(const Ring& ring, std::vector<int> parent);

    Ring ring;
    std::vector<int> parent;
    // Cliques of the completion; empty for networks read back from text.
    std::vector<std::vector<std::uint32_t>> cliques;
    // order[i] is the input variable that became x_i.
    std::vector<std::uint32_t> order;
    Backend backend = Backend::ZeroDim;
    bool squarefree = false;
    // The input system, in the relabeled variables.
    std::vector<Poly> inputs;

    // Ranks below this one have been projected away (see eliminate_below).
    std::uint32_t lowest = 0;

    std::size_t ranks() const noexcept { return parent.size(); }
    std::size_t active_ranks() const noexcept { return parent.size() - lowest; }
    std::vector<std::vector<std::uint32_t>> child_ranks() const;

    std::uint32_t add_node(std::uint32_t rank, PolySystem content);
    void remove_node(std::uint32_t id);
    bool has_node(std::uint32_t id) const { return id < nodes_.size() && nodes_[id].has_value(); }
    const Node& node(std::uint32_t id) const { return nodes_.at(id).value(); }
    Node& node(std::uint32_t id) { return nodes_.at(id).value(); }
    // Node ids of a rank, increasing.
    const std::vector<std::uint32_t>& rank_nodes(std::uint32_t l) const { return by_rank_.at(l); }

    void add_arc(std::uint32_t child, std::uint32_t par);
    void remove_arc(std::uint32_t child, std::uint32_t par);
    const std::set<std::uint32_t>& in_arcs(std::uint32_t id) const { return in_.at(id); }
    const std::set<std::uint32_t>& out_arcs(std::uint32_t id) const { return out_.at(id); }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs() const;

    std::size_t node_count() const;
    std::size_t arc_count() const;
    std::size_t width() const;
    std::vector<std::uint32_t> node_ids() const;

    // Removes nodes that lie on no chain. Returns true if anything changed.
    bool prune();
    // Renumbers node ids densely by (rank, id).
    void compact();

private:
    std::vector<std::optional<Node>> nodes_;
    std::vector<std::set<std::uint32_t>> in_;
    std::vector<std::set<std::uint32_t>> out_;
    std::vector<std::vector<std::uint32_t>> by_rank_;
};

std::string content_key(const PolySystem& s);

ChordalNetwork induced_network(const std::vector<Poly>& F, const ChordalStructure& cs);

struct TriangularizeOptions {
    Backend backend = Backend::Auto;
    bool squarefree = false;
    // Remove inequations once the run is over (binomial mode).
    bool strip = false;
    GroebnerOptions groebner{};
    unsigned threads = 0; // 0 = hardware concurrency
};

Backend sniff_backend(const std::vector<Poly>& F);

// Decomposes one node content with the given backend.
std::vector<PolySystem> decompose_content(const PolySystem& content, Backend backend, const DecompOptions& opt);
// Replaces a node by one node per system, copying every arc. An empty list
// deletes the node.
void replace_node(ChordalNetwork& net, std::uint32_t id, const std::vector<PolySystem>& parts);
void triangulate_node(ChordalNetwork& net, std::uint32_t id, Backend backend, const DecompOptions& opt);
void eliminate_node(ChordalNetwork& net, std::uint32_t id);
void merge_in(ChordalNetwork& net, std::uint32_t l);
void merge_out(ChordalNetwork& net, std::uint32_t l);
// Both merges on every rank until nothing changes.
void merge_all(ChordalNetwork& net);

ChordalNetwork chordal_triangularize(const std::vector<Poly>& F, const ChordalStructure& cs,
                                     const TriangularizeOptions& opt = {});

// Depth-first chain enumeration from the root rank down; the visitor returns
// false to stop early.
void for_each_chain(const ChordalNetwork& net, const std::function<bool(const Chain&)>& visit);
std::vector<Chain> chains(const ChordalNetwork& net, std::size_t limit = SIZE_MAX);
BigInt chain_count(const ChordalNetwork& net);
PolySystem chain_system(const ChordalNetwork& net, const Chain& c);

ChordalNetwork strip_inequations(const ChordalNetwork& net);

} // namespace chordnet
