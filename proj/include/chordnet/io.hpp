#pragma once

#include <chordnet/chordal.hpp>
#include <chordnet/network.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chordnet {

struct Problem {
    Ring ring;
    std::vector<Poly> polys;
    std::optional<std::vector<std::uint32_t>> order;
};

// Problem files hold one polynomial per line. Lines starting with '#' are
// comments; `p = <prime>`, `n = <count>` and `order = i0 i1 ...` are
// directives. Without `n`, the ring has one variable past the largest index
// mentioned.
Problem parse_problem_text(std::string_view text);
Problem parse_problem(const std::string& path);
std::string format_problem(const Problem& pb);

// Polynomial lines (comments allowed) over a fixed ring.
std::vector<Poly> parse_poly_lines(std::string_view text, const Ring& ring);

// One line of n space-separated vertex indices.
std::vector<std::uint32_t> parse_order(std::string_view text, std::size_t n);
// Resolves natural, mindeg or file:<path> against the support graph of F.
std::vector<std::uint32_t> resolve_order(const std::string& spec, const std::vector<Poly>& F, std::size_t n);

// Relabels the system with the order, completes its support graph and runs
// the triangularization. The network keeps the order for mapping back.
ChordalNetwork triangularize_problem(const std::vector<Poly>& F, const std::vector<std::uint32_t>& order,
                                     const TriangularizeOptions& opt = {});
// Same, with an explicit chordal structure in network variables.
ChordalNetwork triangularize_relabeled(const std::vector<Poly>& F, const ChordalStructure& cs,
                                       const std::vector<std::uint32_t>& order, const TriangularizeOptions& opt = {});

std::string dump_network(const ChordalNetwork& net);
ChordalNetwork parse_network(std::string_view text);
ChordalNetwork read_network(const std::string& path);
void write_network(const std::string& path, const ChordalNetwork& net);

// Graphviz rendering. Each group in collapse is drawn as a single box.
std::string export_dot(const ChordalNetwork& net, const std::vector<std::vector<std::uint32_t>>& collapse = {});

std::string read_file(const std::string& path);

} // namespace chordnet
