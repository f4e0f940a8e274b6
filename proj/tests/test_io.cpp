#include "support.hpp"

#include <doctest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>

using namespace chordnet;
using namespace testing_support;

namespace {

// Recursive-descent check against the DOT grammar (graph, stmt_list,
// node/edge/attr statements, ID = ID, subgraphs). Returns the node ids seen
// in node statements and the edges, or throws on malformed input.
class DotChecker {
public:
    explicit DotChecker(std::string text) : s_(std::move(text)) {}

    void run() {
        expect_id("digraph");
        if (peek() != "{") next();
        expect("{");
        stmt_list();
        expect("}");
        if (!next().empty()) fail("trailing input");
        for (const auto& [a, b] : edges)
            if (!nodes.count(a) || !nodes.count(b)) fail("edge to an undeclared node");
    }

    std::set<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t clusters = 0;

private:
    [[noreturn]] void fail(const std::string& why) { throw std::runtime_error("bad DOT: " + why); }

    std::string lex(std::size_t& i) const {
        while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
        if (i >= s_.size()) return "";
        const char c = s_[i];
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < s_.size() && s_[j] != '"') j += s_[j] == '\\' ? 2 : 1;
            if (j >= s_.size()) throw std::runtime_error("bad DOT: unterminated string");
            std::string out = s_.substr(i, j + 1 - i);
            i = j + 1;
            return out;
        }
        if (s_.compare(i, 2, "->") == 0) {
            i += 2;
            return "->";
        }
        if (std::string("{}[];,=").find(c) != std::string::npos) return std::string(1, s_[i++]);
        std::size_t j = i;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '.')) ++j;
        if (j == i) throw std::runtime_error(std::string("bad DOT: unexpected '") + c + "'");
        std::string out = s_.substr(i, j - i);
        i = j;
        return out;
    }
    std::string peek() const {
        std::size_t i = pos_;
        return lex(i);
    }
    std::string next() { return lex(pos_); }
    void expect(const std::string& t) {
        if (next() != t) fail("expected " + t);
    }
    void expect_id(const std::string& t) { expect(t); }
    static bool is_id(const std::string& t) {
        return !t.empty() && (t[0] == '"' || std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_');
    }

    void attr_list() {
        while (peek() == "[") {
            next();
            while (peek() != "]") {
                if (!is_id(next())) fail("attribute name");
                expect("=");
                if (!is_id(next())) fail("attribute value");
                if (peek() == "," || peek() == ";") next();
            }
            next();
        }
    }

    void stmt_list() {
        while (peek() != "}" && !peek().empty()) {
            stmt();
            if (peek() == ";") next();
        }
    }

    void stmt() {
        const std::string t = next();
        if (t == "subgraph") {
            const std::string name = next();
            if (name.rfind("cluster", 0) == 0) ++clusters;
            expect("{");
            stmt_list();
            expect("}");
            return;
        }
        if (t == "graph" || t == "node" || t == "edge") {
            attr_list();
            return;
        }
        if (!is_id(t)) fail("statement start '" + t + "'");
        if (peek() == "=") {
            next();
            if (!is_id(next())) fail("value");
            return;
        }
        if (peek() == "->") {
            std::string from = t;
            while (peek() == "->") {
                next();
                const std::string to = next();
                if (!is_id(to)) fail("edge target");
                edges.push_back({from, to});
                from = to;
            }
            attr_list();
            return;
        }
        nodes.insert(t);
        attr_list();
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / ("chordnet_test_" + name);
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST_CASE("problem files") {
    SUBCASE("a bare polynomial") {
        const Problem pb = parse_problem_text("x0^3 - 1\n");
        CHECK(pb.ring.n == 1);
        CHECK(pb.ring.p == 65521);
        CHECK(pb.polys.size() == 1);
        CHECK_FALSE(pb.order.has_value());
    }
    SUBCASE("the 9-cycle coloring fixture") {
        const Problem pb = parse_problem(fixture("coloring9.sys"));
        CHECK(pb.polys.size() == 18);
        CHECK(pb.ring.n == 9);
        CHECK(pb.ring.p == 13);
    }
    SUBCASE("directives and comments") {
        const Problem pb = parse_problem_text("# a comment\np = 7\nn = 5\norder = 4 3 2 1 0\nx0*x1 - 1\n\nx2\n");
        CHECK(pb.ring.n == 5);
        CHECK(pb.ring.p == 7);
        REQUIRE(pb.order.has_value());
        CHECK(*pb.order == std::vector<std::uint32_t>{4, 3, 2, 1, 0});
        CHECK(pb.polys.size() == 2);
        CHECK(parse_problem_text(format_problem(pb)).polys == pb.polys);
    }
    SUBCASE("errors") {
        try {
            (void)parse_problem_text("p = 7\nx0^^2\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 4);
        }
        CHECK_THROWS_AS(parse_problem_text("p = 9\nx0\n"), NonPrimeModulus);
        CHECK_THROWS_AS(parse_problem_text("n = 2\nx5\n"), ParseError);
        CHECK_THROWS_AS(parse_problem_text("order = 0 0\nx0*x1\n"), ParseError);
    }
    SUBCASE("round trip of every fixture") {
        for (const char* name : {"coloring9.sys", "coloring10.sys", "example36.sys", "example51.sys", "minors2x4.sys",
                                 "tree_edges.sys", "lattice5.sys"}) {
            const Problem pb = parse_problem(fixture(name));
            const Problem back = parse_problem_text(format_problem(pb));
            CHECK(back.polys == pb.polys);
            CHECK(back.ring.p == pb.ring.p);
            CHECK(back.ring.n == pb.ring.n);
        }
    }
}

TEST_CASE("orders") {
    CHECK(parse_order("2 0 1", 3) == std::vector<std::uint32_t>{2, 0, 1});
    CHECK_THROWS(parse_order("0 1", 3));
    CHECK_THROWS(parse_order("0 1 1", 3));

    const Problem pb = parse_problem(fixture("coloring9.sys"));
    CHECK(resolve_order("natural", pb.polys, 9) == identity_order(9));
    const auto md = resolve_order("mindeg", pb.polys, 9);
    CHECK(std::set<std::uint32_t>(md.begin(), md.end()).size() == 9);
    const auto path = temp_file("order.txt", "8 7 6 5 4 3 2 1 0\n");
    CHECK(resolve_order("file:" + path.string(), pb.polys, 9) == std::vector<std::uint32_t>{8, 7, 6, 5, 4, 3, 2, 1, 0});
    std::filesystem::remove(path);
    CHECK_THROWS(resolve_order("bogus", pb.polys, 9));
}

TEST_CASE("non-natural orders give the same answers") {
    const Problem pb = parse_problem(fixture("coloring9.sys"));
    TriangularizeOptions opt;
    opt.backend = Backend::ZeroDim;
    opt.squarefree = true;
    opt.threads = 1;
    for (const char* spec : {"natural", "mindeg"}) {
        const ChordalNetwork net = triangularize_problem(pb.polys, resolve_order(spec, pb.polys, 9), opt);
        CHECK(zero_count(net) == 510);
    }
    std::vector<std::uint32_t> rev(9);
    for (std::uint32_t i = 0; i < 9; ++i) rev[i] = 8 - i;
    const ChordalNetwork net = triangularize_problem(pb.polys, rev, opt);
    CHECK(zero_count(net) == 510);
    CHECK(net.order == rev);
    std::mt19937_64 rng(61);
    // Samples come back in network variables; map them to the input numbering.
    for (int i = 0; i < 20; ++i) {
        const auto pt = sample(net, rng);
        std::vector<Coeff> orig(9);
        for (std::uint32_t v = 0; v < 9; ++v) orig[net.order[v]] = pt[v];
        CHECK(satisfies({pb.polys, {}}, orig));
    }
}

TEST_CASE("network dumps round trip") {
    struct Case {
        const char* file;
        Backend backend;
        bool squarefree;
    };
    for (const Case& c : {Case{"example36.sys", Backend::ZeroDim, true}, Case{"coloring10.sys", Backend::ZeroDim, true},
                          Case{"minors2x4.sys", Backend::Binomial, false},
                          Case{"example51.sys", Backend::Monomial, false}}) {
        const ChordalNetwork net = build(parse_problem(fixture(c.file)).polys, c.backend, c.squarefree);
        const std::string text = dump_network(net);
        const ChordalNetwork back = parse_network(text);
        CHECK(dump_network(back) == text);
        CHECK(chain_count(back) == chain_count(net));
        CHECK(dimension(back) == dimension(net));
        CHECK(dim_census(back) == dim_census(net));
        CHECK(back.squarefree == net.squarefree);
        CHECK(back.backend == net.backend);
        if (dimension(net) == 0) CHECK(zero_count(back) == zero_count(net));

        const auto path = temp_file("net.txt", "");
        write_network(path.string(), net);
        CHECK(dump_network(read_network(path.string())) == text);
        std::filesystem::remove(path);
    }

    const ChordalNetwork top = top_component(build(parse_problem(fixture("minors2x4.sys")).polys, Backend::Binomial, false));
    CHECK(dump_network(parse_network(dump_network(top))) == dump_network(top));

    CHECK_THROWS_AS(parse_network("ranks=2 p=7\nnode 0 rank=5 eqs= ineqs=\n"), ParseError);
    CHECK_THROWS_AS(parse_network("garbage\n"), ParseError);
}

TEST_CASE("DOT export") {
    SUBCASE("the checker rejects malformed input") {
        for (const char* bad : {"digraph { a -> }", "digraph { a [label=\"x] }", "digraph { a -> b }", "graph {"}) {
            DotChecker d(bad);
            CHECK_THROWS(d.run());
        }
    }
    SUBCASE("the three-chain network") {
        const ChordalNetwork net = build(parse_problem(fixture("example36.sys")).polys, Backend::ZeroDim, false);
        DotChecker d(export_dot(net));
        d.run();
        CHECK(d.nodes.size() == 7);
        CHECK(d.edges.size() == 7);
        CHECK(d.clusters == 4);
    }
    SUBCASE("a single node") {
        const Ring R = make_ring(1, 7);
        DotChecker d(export_dot(build({P(R, "x0 - 3")}, Backend::ZeroDim, false)));
        d.run();
        CHECK(d.nodes.size() == 1);
        CHECK(d.edges.empty());
        CHECK(d.clusters == 1);
    }
    SUBCASE("collapsed pairs with inequations") {
        const ChordalNetwork net = build(parse_problem(fixture("minors2x4.sys")).polys, Backend::Binomial, false);
        std::vector<std::vector<std::uint32_t>> pairs;
        for (std::uint32_t l = 0; l < 8; l += 2) pairs.push_back({l, l + 1});
        const std::string text = export_dot(net, pairs);
        DotChecker d(text);
        d.run();
        CHECK(d.clusters == 4);
        CHECK(d.nodes.size() == net.node_count());
        CHECK(text.find("label=\"01\"") != std::string::npos);
        CHECK(text.find("label=\"67\"") != std::string::npos);
        CHECK(text.find(" / ") != std::string::npos);
    }
}
