#include <chordnet/io.hpp>
#include <chordnet/queries.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

using namespace chordnet;

namespace {

std::uint64_t pick_seed(const std::optional<std::uint64_t>& flag) {
    std::uint64_t seed = 0;
    if (flag) {
        seed = *flag;
    } else if (const char* env = std::getenv("CHORDALNET_SEED"); env && *env) {
        seed = std::stoull(env);
    } else {
        std::random_device rd;
        seed = (std::uint64_t{rd()} << 32) ^ rd();
    }
    std::cerr << "seed: " << seed << "\n";
    return seed;
}

// Parses "0,1" into one group; "pairs" groups ranks 2i and 2i+1.
std::vector<std::vector<std::uint32_t>> collapse_groups(const std::vector<std::string>& specs, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const std::string& s : specs) {
        if (s == "pairs") {
            for (std::uint32_t l = 0; l + 1 < n; l += 2) out.push_back({l, l + 1});
            continue;
        }
        std::vector<std::uint32_t> g;
        std::stringstream ss(s);
        for (std::string tok; std::getline(ss, tok, ',');) g.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        out.push_back(std::move(g));
    }
    return out;
}

void print_chain(const ChordalNetwork& net, const Chain& c) {
    std::string s;
    for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) {
        const PolySystem& x = net.node(c[l]).content;
        for (const Poly& f : x.eqs) s += (s.empty() ? "" : ", ") + f.str();
    }
    std::cout << "(" << s << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chordal networks of polynomial systems over prime fields"};
    app.require_subcommand(1);

    std::string file, net_file, out_file, mode = "auto", order_spec, poly_file;
    bool squarefree = false, strip = false, check = false;
    unsigned threads = 0, trials = 20;
    std::size_t k = 1, max_count = SIZE_MAX;
    std::optional<std::uint64_t> seed;
    std::optional<long> min_dim;
    long d = 0;
    std::vector<std::string> collapse;

    auto* tri = app.add_subcommand("tri", "triangularize a problem file into a network");
    tri->add_option("file", file, "problem file")->required();
    tri->add_option("--mode", mode, "decomposition backend")
        ->check(CLI::IsMember({"auto", "zerodim", "monomial", "binomial"}));
    tri->add_flag("--squarefree", squarefree, "squarefree refinement");
    tri->add_option("--order", order_spec, "natural, mindeg or file:<path>");
    tri->add_flag("--strip", strip, "drop inequations at the end");
    tri->add_option("--threads", threads, "worker threads (0 = all cores)");
    tri->add_option("--out", out_file, "write the network here instead of stdout");

    auto* count = app.add_subcommand("count", "number of solutions");
    count->add_option("net", net_file)->required();

    auto* smp = app.add_subcommand("sample", "random solutions");
    smp->add_option("net", net_file)->required();
    smp->add_option("-k", k, "number of points");
    smp->add_option("--seed", seed, "random seed");
    smp->add_flag("--check", check, "evaluate the input system at each point");

    auto* mem = app.add_subcommand("member", "does a polynomial vanish on the variety");
    mem->add_option("net", net_file)->required();
    mem->add_option("polyfile", poly_file)->required();
    mem->add_option("--trials", trials, "number of trials");
    mem->add_option("--seed", seed, "random seed");

    auto* dim = app.add_subcommand("dim", "dimension of the variety");
    dim->add_option("net", net_file)->required();

    auto* top = app.add_subcommand("top", "top-dimensional part");
    top->add_option("net", net_file)->required();
    top->add_option("--out", out_file);

    auto* cen = app.add_subcommand("census", "chain count per dimension");
    cen->add_option("net", net_file)->required();

    auto* iso = app.add_subcommand("isolate", "chains of one dimension");
    iso->add_option("net", net_file)->required();
    iso->add_option("-d", d, "dimension")->required();

    auto* comp = app.add_subcommand("components", "minimal primes");
    comp->add_option("net", net_file)->required();
    comp->add_option("--max", max_count, "stop after this many");
    comp->add_option("--min-dim", min_dim, "skip components below this dimension");

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    dot->add_option("net", net_file)->required();
    dot->add_option("--collapse", collapse, "comma-separated ranks drawn together, or 'pairs'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (tri->parsed()) {
            const Problem pb = parse_problem(file);
            std::vector<std::uint32_t> order;
            if (!order_spec.empty()) order = resolve_order(order_spec, pb.polys, pb.ring.n);
            else if (pb.order) order = *pb.order;
            else order = identity_order(pb.ring.n);
            TriangularizeOptions opt;
            opt.backend = backend_from_string(mode);
            opt.squarefree = squarefree;
            opt.strip = strip;
            opt.threads = threads;
            const ChordalNetwork net = triangularize_problem(pb.polys, order, opt);
            if (out_file.empty()) std::cout << dump_network(net);
            else write_network(out_file, net);
            std::cerr << "nodes: " << net.node_count() << " arcs: " << net.arc_count() << " width: " << net.width()
                      << " chains: " << chain_count(net) << "\n";
            return 0;
        }

        const ChordalNetwork net = read_network(net_file);
        if (count->parsed()) {
            if (!net.squarefree) std::cerr << "warning: network is not squarefree, the count is an upper bound\n";
            std::cout << zero_count(net) << "\n";
        } else if (smp->parsed()) {
            std::mt19937_64 rng(pick_seed(seed));
            for (std::size_t i = 0; i < k; ++i) {
                const std::vector<Coeff> pt = sample(net, rng);
                if (check)
                    for (const Poly& f : net.inputs)
                        if (f.evaluate(pt) != 0) throw std::runtime_error("sampled point fails " + f.str());
                std::vector<Coeff> orig(pt.size());
                for (std::size_t v = 0; v < pt.size(); ++v) orig[net.order[v]] = pt[v];
                for (std::size_t v = 0; v < orig.size(); ++v) std::cout << (v ? "," : "") << orig[v];
                std::cout << "\n";
            }
        } else if (mem->parsed()) {
            std::mt19937_64 rng(pick_seed(seed));
            const auto pos = invert_order(net.order);
            for (const Poly& h : parse_poly_lines(read_file(poly_file), net.ring)) {
                const bool v = radical_member(net, h.relabel(pos, net.ring), rng, MemberOptions{trials});
                std::cout << "vanishes: " << (v ? "true" : "false") << "\n";
            }
        } else if (dim->parsed()) {
            std::cout << dimension(net) << "\n";
        } else if (top->parsed()) {
            const ChordalNetwork t = top_component(net);
            if (out_file.empty()) std::cout << dump_network(t);
            else write_network(out_file, t);
            std::cerr << "chains: " << chain_count(t) << "\n";
        } else if (cen->parsed()) {
            const auto c = dim_census(net);
            for (auto it = c.rbegin(); it != c.rend(); ++it) std::cout << "dim " << it->first << ": " << it->second << "\n";
        } else if (iso->parsed()) {
            isolate_dim(net, d, [&](const Chain& c) {
                print_chain(net, c);
                return true;
            });
        } else if (comp->parsed()) {
            PrimeOptions opt;
            opt.max_count = max_count;
            opt.min_dim = min_dim;
            // Generators come back in network variables; print them in the
            // input numbering.
            const Ring R = net.ring;
            for (const PrimeComponent& P : minimal_primes(net, opt)) {
                std::string s;
                for (const Poly& g : P.generators) s += (s.empty() ? "" : ", ") + g.relabel(net.order, R).str();
                std::cout << "dim " << P.dim << ": <" << s << ">\n";
            }
        } else if (dot->parsed()) {
            std::cout << export_dot(net, collapse_groups(collapse, net.ranks()));
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
