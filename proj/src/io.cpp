#include <chordnet/io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace chordnet {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::size_t first_non_space(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return i;
}

std::string_view trim(std::string_view s) {
    s.remove_prefix(first_non_space(s));
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_blank_or_comment(std::string_view line) {
    const std::string_view t = trim(line);
    return t.empty() || t.front() == '#';
}

// Parses a whitespace-separated list of non-negative integers, reporting the
// column of the first bad token.
std::vector<std::uint64_t> parse_ints(std::string_view s, std::size_t line, std::size_t col0) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t') {
            ++i;
            continue;
        }
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        const auto used = static_cast<std::size_t>(ptr - (s.data() + i));
        if (ec != std::errc{} || (i + used < s.size() && s[i + used] != ' ' && s[i + used] != '\t'))
            throw ParseError("expected a non-negative integer", line, col0 + i + 1);
        out.push_back(v);
        i += used;
    }
    return out;
}

struct Directive {
    std::string key;
    std::string_view value;
    std::size_t value_col; // zero-based column of value within the line
};

std::optional<Directive> directive_of(std::string_view line) {
    const std::size_t s = first_non_space(line);
    std::size_t e = s;
    while (e < line.size() && std::isalpha(static_cast<unsigned char>(line[e]))) ++e;
    const std::string key(line.substr(s, e - s));
    if (key != "p" && key != "n" && key != "order") return std::nullopt;
    std::size_t k = e;
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k >= line.size() || line[k] != '=') return std::nullopt;
    return Directive{key, line.substr(k + 1), k + 1};
}

std::vector<std::uint32_t> check_permutation(const std::vector<std::uint64_t>& v, std::size_t n,
                                             std::size_t line) {
    if (v.size() != n)
        throw ParseError("order lists " + std::to_string(v.size()) + " indices but n = " + std::to_string(n), line, 1);
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t x : v) {
        if (x >= n || seen[x]) throw ParseError("order is not a permutation of 0.." + std::to_string(n - 1), line, 1);
        seen[x] = true;
        out.push_back(static_cast<std::uint32_t>(x));
    }
    return out;
}

std::string join_polys(const std::vector<Poly>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].str();
    return s;
}

std::vector<Poly> split_polys(std::string_view s, const Ring& R, std::size_t line, std::size_t col0) {
    std::vector<Poly> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = s.find(';', start);
        if (end == std::string_view::npos) end = s.size();
        const std::string_view piece = s.substr(start, end - start);
        if (!trim(piece).empty()) out.push_back(parse_poly(piece, R, line, col0 + start));
        start = end + 1;
    }
    return out;
}

std::string_view after_prefix(std::string_view line, std::string_view prefix, std::size_t lineno) {
    if (line.substr(0, prefix.size()) != prefix) throw ParseError("expected '" + std::string(prefix) + "'", lineno, 1);
    return line.substr(prefix.size());
}

std::uint64_t field_value(std::string_view tok, std::string_view key, std::size_t lineno) {
    const auto pos = tok.find(std::string(key) + "=");
    if (pos == std::string_view::npos) throw ParseError("missing " + std::string(key) + "=", lineno, 1);
    std::string_view v = tok.substr(pos + key.size() + 1);
    v = v.substr(0, v.find(' '));
    const auto ints = parse_ints(v, lineno, pos + key.size() + 1);
    if (ints.size() != 1) throw ParseError("bad value for " + std::string(key), lineno, pos + 1);
    return ints[0];
}

std::string dot_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Problem parse_problem_text(std::string_view text) {
    const auto lines = split_lines(text);
    std::uint64_t p = 65521;
    std::optional<std::uint64_t> n;
    std::optional<std::pair<std::vector<std::uint64_t>, std::size_t>> order_raw;
    long maxvar = -1;
    std::vector<std::size_t> poly_lines;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        if (is_blank_or_comment(line)) continue;
        if (auto d = directive_of(line)) {
            const auto vals = parse_ints(d->value, i + 1, d->value_col);
            if (d->key == "order") {
                order_raw = std::make_pair(vals, i + 1);
                continue;
            }
            if (vals.size() != 1) throw ParseError("directive '" + d->key + "' takes one integer", i + 1, d->value_col + 1);
            (d->key == "p" ? p : n.emplace()) = vals[0];
            continue;
        }
        maxvar = std::max(maxvar, max_var_index(line));
        poly_lines.push_back(i);
    }

    const std::size_t nv = n ? static_cast<std::size_t>(*n) : static_cast<std::size_t>(maxvar + 1);
    if (maxvar >= static_cast<long>(nv))
        throw ParseError("variable x" + std::to_string(maxvar) + " exceeds n = " + std::to_string(nv), 1, 1);
    Problem pb{make_ring(nv, p), {}, std::nullopt};
    for (std::size_t i : poly_lines) pb.polys.push_back(parse_poly(lines[i], pb.ring, i + 1, 0));
    if (order_raw) pb.order = check_permutation(order_raw->first, nv, order_raw->second);
    return pb;
}

Problem parse_problem(const std::string& path) { return parse_problem_text(read_file(path)); }

std::string format_problem(const Problem& pb) {
    std::string s = "p = " + std::to_string(pb.ring.p) + "\nn = " + std::to_string(pb.ring.n) + "\n";
    if (pb.order) {
        s += "order =";
        for (std::uint32_t v : *pb.order) s += " " + std::to_string(v);
        s += "\n";
    }
    for (const Poly& f : pb.polys) s += f.str() + "\n";
    return s;
}

std::vector<Poly> parse_poly_lines(std::string_view text, const Ring& ring) {
    std::vector<Poly> out;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!is_blank_or_comment(lines[i])) out.push_back(parse_poly(lines[i], ring, i + 1, 0));
    return out;
}

std::vector<std::uint32_t> parse_order(std::string_view text, std::size_t n) {
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank_or_comment(lines[i])) continue;
        return check_permutation(parse_ints(lines[i], i + 1, 0), n, i + 1);
    }
    throw ParseError("order file is empty", 1, 1);
}

std::vector<std::uint32_t> resolve_order(const std::string& spec, const std::vector<Poly>& F, std::size_t n) {
    if (spec == "natural") return identity_order(n);
    if (spec == "mindeg") return suggest_order(support_graph(F, n));
    if (spec.rfind("file:", 0) == 0) return parse_order(read_file(spec.substr(5)), n);
    throw std::invalid_argument("unknown order '" + spec + "' (expected natural, mindeg or file:<path>)");
}

ChordalNetwork triangularize_relabeled(const std::vector<Poly>& F, const ChordalStructure& cs,
                                       const std::vector<std::uint32_t>& order, const TriangularizeOptions& opt) {
    ChordalNetwork net = chordal_triangularize(F, cs, opt);
    net.order = order;
    return net;
}

ChordalNetwork triangularize_problem(const std::vector<Poly>& F, const std::vector<std::uint32_t>& order,
                                     const TriangularizeOptions& opt) {
    if (F.empty()) throw std::invalid_argument("empty polynomial system");
    const Ring R = F.front().ring();
    const auto pos = invert_order(order);
    std::vector<Poly> G;
    for (const Poly& f : F) G.push_back(f.relabel(pos, R));
    const ChordalStructure cs = complete_with_order(support_graph(F, R.n), order);
    return triangularize_relabeled(G, cs, order, opt);
}

std::string dump_network(const ChordalNetwork& net) {
    std::ostringstream o;
    o << "ranks=" << net.ranks() << " p=" << net.ring.p << "\n";
    o << "meta mode=" << to_string(net.backend) << " squarefree=" << (net.squarefree ? 1 : 0)
      << " lowest=" << net.lowest << "\n";
    o << "order";
    for (std::uint32_t v : net.order) o << " " << v;
    o << "\ntree";
    for (int p : net.parent) o << " " << p;
    o << "\n";
    for (const Poly& f : net.inputs) o << "input " << f.str() << "\n";
    const auto ids = net.node_ids();
    std::map<std::uint32_t, std::size_t> num;
    for (std::size_t i = 0; i < ids.size(); ++i) num[ids[i]] = i;
    for (std::uint32_t id : ids) {
        const Node& nd = net.node(id);
        o << "node " << num[id] << " rank=" << nd.rank << " eqs=" << join_polys(nd.content.eqs)
          << " ineqs=" << join_polys(nd.content.ineqs) << "\n";
    }
    for (std::uint32_t id : ids)
        for (std::uint32_t p : net.out_arcs(id)) o << "arc " << num[id] << " " << num[p] << "\n";
    return o.str();
}

ChordalNetwork parse_network(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    auto next = [&]() -> std::optional<std::string_view> {
        while (i < lines.size() && trim(lines[i]).empty()) ++i;
        if (i == lines.size()) return std::nullopt;
        return lines[i++];
    };

    auto header = next();
    if (!header) throw ParseError("empty network file", 1, 1);
    const std::size_t n = field_value(*header, "ranks", i);
    const Ring R = make_ring(n, field_value(*header, "p", i));

    ChordalNetwork net(R, std::vector<int>(n));
    for (std::size_t l = 0; l < n; ++l) net.parent[l] = l + 1 < n ? static_cast<int>(l + 1) : -1;
    std::map<std::uint64_t, std::uint32_t> ids;

    while (auto line = next()) {
        const std::size_t ln = i;
        const std::string_view s = *line;
        if (s.rfind("meta ", 0) == 0) {
            const auto m = s.find("mode=");
            if (m == std::string_view::npos) throw ParseError("missing mode=", ln, 1);
            std::string_view mode = s.substr(m + 5);
            mode = mode.substr(0, mode.find(' '));
            try {
                net.backend = backend_from_string(std::string(mode));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), ln, m + 6);
            }
            net.squarefree = field_value(s, "squarefree", ln) != 0;
            if (s.find("lowest=") != std::string_view::npos)
                net.lowest = static_cast<std::uint32_t>(field_value(s, "lowest", ln));
        } else if (s.rfind("order", 0) == 0 && (s.size() == 5 || s[5] == ' ')) {
            net.order = check_permutation(parse_ints(s.substr(5), ln, 5), n, ln);
        } else if (s.rfind("tree", 0) == 0 && (s.size() == 4 || s[4] == ' ')) {
            std::istringstream in{std::string(s.substr(4))};
            std::vector<int> par;
            for (int x; in >> x;) par.push_back(x);
            if (par.size() != n) throw ParseError("tree lists " + std::to_string(par.size()) + " parents", ln, 1);
            for (std::size_t l = 0; l < n; ++l)
                if (par[l] != -1 && (par[l] <= static_cast<int>(l) || par[l] >= static_cast<int>(n)))
                    throw ParseError("parent of rank " + std::to_string(l) + " must exceed it", ln, 1);
            net.parent = par;
        } else if (s.rfind("input ", 0) == 0) {
            net.inputs.push_back(parse_poly(s.substr(6), R, ln, 6));
        } else if (s.rfind("node ", 0) == 0) {
            const auto rest = after_prefix(s, "node ", ln);
            const auto ids_tok = parse_ints(rest.substr(0, rest.find(' ')), ln, 5);
            if (ids_tok.size() != 1) throw ParseError("bad node id", ln, 6);
            const auto rank = field_value(s, "rank", ln);
            if (rank >= n) throw ParseError("rank out of range", ln, s.find("rank=") + 6);
            const auto eq_pos = s.find(" eqs=");
            const auto in_pos = s.find(" ineqs=");
            if (eq_pos == std::string_view::npos || in_pos == std::string_view::npos || in_pos < eq_pos)
                throw ParseError("expected eqs= and ineqs=", ln, 1);
            PolySystem sys;
            sys.eqs = split_polys(s.substr(eq_pos + 5, in_pos - eq_pos - 5), R, ln, eq_pos + 5);
            sys.ineqs = split_polys(s.substr(in_pos + 7), R, ln, in_pos + 7);
            if (ids.count(ids_tok[0])) throw ParseError("duplicate node id", ln, 6);
            ids[ids_tok[0]] = net.add_node(static_cast<std::uint32_t>(rank), std::move(sys));
        } else if (s.rfind("arc ", 0) == 0) {
            const auto v = parse_ints(s.substr(4), ln, 4);
            if (v.size() != 2 || !ids.count(v[0]) || !ids.count(v[1])) throw ParseError("bad arc", ln, 1);
            const std::uint32_t c = ids[v[0]], p = ids[v[1]];
            if (net.parent[net.node(c).rank] != static_cast<int>(net.node(p).rank))
                throw ParseError("arc does not follow the elimination tree", ln, 1);
            net.add_arc(c, p);
        } else {
            throw ParseError("unrecognized line", ln, 1);
        }
    }
    if (net.order.size() != n) net.order = identity_order(n);
    return net;
}

ChordalNetwork read_network(const std::string& path) { return parse_network(read_file(path)); }

void write_network(const std::string& path, const ChordalNetwork& net) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_network(net);
}

std::string export_dot(const ChordalNetwork& net, const std::vector<std::vector<std::uint32_t>>& collapse) {
    // Map each rank to its display group, identified by the smallest rank.
    std::vector<std::uint32_t> group(net.ranks());
    for (std::uint32_t l = 0; l < net.ranks(); ++l) group[l] = l;
    for (const auto& g : collapse) {
        if (g.empty()) continue;
        const std::uint32_t lead = *std::min_element(g.begin(), g.end());
        for (std::uint32_t l : g)
            if (l < net.ranks()) group[l] = std::min(group[l], lead);
    }
    std::map<std::uint32_t, std::vector<std::uint32_t>> members;
    for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) members[group[l]].push_back(l);

    std::ostringstream o;
    o << "digraph chordal_network {\n  rankdir=TB;\n  node [shape=box];\n";
    for (const auto& [g, ranks] : members) {
        std::string label;
        for (std::uint32_t l : ranks) label += std::to_string(l);
        o << "  subgraph cluster_" << g << " {\n    label=\"" << label << "\";\n";
        for (std::uint32_t l : ranks)
            for (std::uint32_t id : net.rank_nodes(l)) {
                const PolySystem& s = net.node(id).content;
                std::string text;
                for (std::size_t k = 0; k < s.eqs.size(); ++k) text += (k ? ", " : "") + s.eqs[k].str();
                if (text.empty()) text = "0";
                if (!s.ineqs.empty()) {
                    text += " / ";
                    for (std::size_t k = 0; k < s.ineqs.size(); ++k) text += (k ? ", " : "") + s.ineqs[k].str();
                }
                o << "    n" << id << " [label=\"" << dot_escape(text) << "\"];\n";
            }
        o << "  }\n";
    }
    for (std::uint32_t id : net.node_ids())
        for (std::uint32_t p : net.out_arcs(id)) o << "  n" << id << " -> n" << p << ";\n";
    o << "}\n";
    return o.str();
}

} // namespace chordnet
