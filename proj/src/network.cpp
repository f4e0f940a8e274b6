#include <chordnet/network.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <unordered_map>

namespace chordnet {

const char* to_string(Backend b) {
    switch (b) {
    case Backend::Auto: return "auto";
    case Backend::ZeroDim: return "zerodim";
    case Backend::Monomial: return "monomial";
    case Backend::Binomial: return "binomial";
    }
    return "auto";
}

Backend backend_from_string(const std::string& s) {
    if (s == "auto") return Backend::Auto;
    if (s == "zerodim") return Backend::ZeroDim;
    if (s == "monomial") return Backend::Monomial;
    if (s == "binomial") return Backend::Binomial;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

// ------------------------------------------------------------ network store

ChordalNetwork::ChordalNetwork(const Ring& r, std::vector<int> par)
    : ring(r), parent(std::move(par)), order(identity_order(parent.size())), by_rank_(parent.size()) {}

std::vector<std::vector<std::uint32_t>> ChordalNetwork::child_ranks() const {
    std::vector<std::vector<std::uint32_t>> ch(parent.size());
    for (std::uint32_t l = lowest; l < parent.size(); ++l)
        if (parent[l] >= 0) ch[static_cast<std::size_t>(parent[l])].push_back(l);
    return ch;
}

std::uint32_t ChordalNetwork::add_node(std::uint32_t rank, PolySystem content) {
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    content.canonicalize();
    nodes_.push_back(Node{id, rank, std::move(content)});
    in_.emplace_back();
    out_.emplace_back();
    by_rank_.at(rank).push_back(id);
    return id;
}

void ChordalNetwork::remove_node(std::uint32_t id) {
    Node& n = node(id);
    for (std::uint32_t c : in_[id]) out_[c].erase(id);
    for (std::uint32_t p : out_[id]) in_[p].erase(id);
    in_[id].clear();
    out_[id].clear();
    auto& v = by_rank_[n.rank];
    v.erase(std::find(v.begin(), v.end(), id));
    nodes_[id].reset();
}

void ChordalNetwork::add_arc(std::uint32_t child, std::uint32_t par) {
    out_.at(child).insert(par);
    in_.at(par).insert(child);
}

void ChordalNetwork::remove_arc(std::uint32_t child, std::uint32_t par) {
    out_.at(child).erase(par);
    in_.at(par).erase(child);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ChordalNetwork::arcs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t id : node_ids())
        for (std::uint32_t p : out_[id]) out.emplace_back(id, p);
    return out;
}

std::size_t ChordalNetwork::node_count() const {
    std::size_t s = 0;
    for (const auto& v : by_rank_) s += v.size();
    return s;
}

std::size_t ChordalNetwork::arc_count() const {
    std::size_t s = 0;
    for (std::uint32_t id : node_ids()) s += out_[id].size();
    return s;
}

std::size_t ChordalNetwork::width() const {
    std::size_t w = 0;
    for (const auto& v : by_rank_) w = std::max(w, v.size());
    return w;
}

std::vector<std::uint32_t> ChordalNetwork::node_ids() const {
    std::vector<std::uint32_t> ids;
    for (const auto& v : by_rank_) ids.insert(ids.end(), v.begin(), v.end());
    return ids;
}

bool ChordalNetwork::prune() {
    const auto ch = child_ranks();
    bool any = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t id : node_ids()) {
            const Node& n = node(id);
            bool dead = parent[n.rank] >= 0 && out_[id].empty();
            for (std::uint32_t c : ch[n.rank]) {
                if (dead) break;
                bool fed = false;
                for (std::uint32_t g : in_[id])
                    if (node(g).rank == c) {
                        fed = true;
                        break;
                    }
                dead = !fed;
            }
            if (dead) {
                remove_node(id);
                changed = any = true;
            }
        }
    }
    return any;
}

void ChordalNetwork::compact() {
    std::vector<std::uint32_t> ids = node_ids();
    std::vector<std::uint32_t> remap(nodes_.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < ids.size(); ++i) remap[ids[i]] = i;
    std::vector<std::optional<Node>> nodes(ids.size());
    std::vector<std::set<std::uint32_t>> in(ids.size()), out(ids.size());
    std::vector<std::vector<std::uint32_t>> by_rank(parent.size());
    for (std::uint32_t old : ids) {
        const std::uint32_t id = remap[old];
        Node n = *nodes_[old];
        n.id = id;
        by_rank[n.rank].push_back(id);
        for (std::uint32_t c : in_[old]) in[id].insert(remap[c]);
        for (std::uint32_t p : out_[old]) out[id].insert(remap[p]);
        nodes[id] = std::move(n);
    }
    nodes_ = std::move(nodes);
    in_ = std::move(in);
    out_ = std::move(out);
    by_rank_ = std::move(by_rank);
}

std::string content_key(const PolySystem& s) {
    std::string k;
    for (const Poly& f : s.eqs) k += f.str() + ";";
    k += "|";
    for (const Poly& f : s.ineqs) k += f.str() + ";";
    return k;
}

// ------------------------------------------------------------- node updates

ChordalNetwork induced_network(const std::vector<Poly>& F, const ChordalStructure& cs) {
    if (F.empty()) throw std::invalid_argument("empty polynomial system");
    const Ring R = F.front().ring();
    ChordalNetwork net(R, cs.parent);
    net.cliques = cs.cliques;
    net.order = cs.order;
    net.inputs = F;
    const std::size_t n = cs.size();
    for (const Poly& f : F) {
        if (f.is_constant()) continue;
        const auto X = cs.cliques.at(static_cast<std::size_t>(f.mvar()));
        for (std::uint32_t v : f.vars())
            if (!std::binary_search(X.begin(), X.end(), v))
                throw UnsupportedPolynomial("support of " + f.str() + " is not inside a clique of the completion");
    }
    std::vector<std::uint32_t> id_of(n);
    for (std::uint32_t l = 0; l < n; ++l) {
        const auto& X = cs.cliques[l];
        PolySystem s;
        for (const Poly& f : F) {
            if (f.is_zero()) continue;
            bool inside = true;
            for (std::uint32_t v : f.vars())
                if (!std::binary_search(X.begin(), X.end(), v)) {
                    inside = false;
                    break;
                }
            if (inside) s.eqs.push_back(f);
        }
        id_of[l] = net.add_node(l, std::move(s));
    }
    for (std::uint32_t l = 0; l < n; ++l)
        if (cs.parent[l] >= 0) net.add_arc(id_of[l], id_of[static_cast<std::size_t>(cs.parent[l])]);
    return net;
}

Backend sniff_backend(const std::vector<Poly>& F) {
    bool mono = true, bino = true;
    for (const Poly& f : F) {
        if (f.size() > 1) mono = false;
        if (f.size() > 2) bino = false;
    }
    if (mono) return Backend::Monomial;
    if (bino) return Backend::Binomial;
    return Backend::ZeroDim;
}

std::vector<PolySystem> decompose_content(const PolySystem& content, Backend backend, const DecompOptions& opt) {
    std::vector<PolySystem> parts;
    switch (backend) {
    case Backend::ZeroDim:
        for (auto& T : tri_zero_dim(content.eqs, opt)) parts.push_back({std::move(T), {}});
        break;
    case Backend::Monomial:
        for (auto& T : tri_monomial(content.eqs)) parts.push_back({std::move(T), content.ineqs});
        break;
    case Backend::Binomial:
        for (auto& rs : tri_binomial(content, opt)) parts.push_back({std::move(rs.T), std::move(rs.U)});
        break;
    case Backend::Auto:
        return decompose_content(content, sniff_backend(content.eqs), opt);
    }
    return parts;
}

void replace_node(ChordalNetwork& net, std::uint32_t id, const std::vector<PolySystem>& parts) {
    const std::uint32_t rank = net.node(id).rank;
    const std::set<std::uint32_t> ins = net.in_arcs(id);
    const std::set<std::uint32_t> outs = net.out_arcs(id);
    net.remove_node(id);
    for (const PolySystem& s : parts) {
        std::uint32_t nid = net.add_node(rank, s);
        for (std::uint32_t c : ins) net.add_arc(c, nid);
        for (std::uint32_t p : outs) net.add_arc(nid, p);
    }
}

void triangulate_node(ChordalNetwork& net, std::uint32_t id, Backend backend, const DecompOptions& opt) {
    replace_node(net, id, decompose_content(net.node(id).content, backend, opt));
}

void eliminate_node(ChordalNetwork& net, std::uint32_t id) {
    const std::uint32_t l = net.node(id).rank;
    if (net.parent.at(l) < 0) return;
    PolySystem Tp, Tl;
    for (const Poly& f : net.node(id).content.eqs) (f.has_var(l) ? Tl.eqs : Tp.eqs).push_back(f);
    for (const Poly& f : net.node(id).content.ineqs) (f.has_var(l) ? Tl.ineqs : Tp.ineqs).push_back(f);

    const std::set<std::uint32_t> outs = net.out_arcs(id);
    for (std::uint32_t fp : outs) {
        PolySystem sum = net.node(fp).content;
        sum.eqs.insert(sum.eqs.end(), Tp.eqs.begin(), Tp.eqs.end());
        sum.ineqs.insert(sum.ineqs.end(), Tp.ineqs.begin(), Tp.ineqs.end());
        const std::uint32_t fresh = net.add_node(net.node(fp).rank, std::move(sum));
        net.remove_arc(id, fp);
        net.add_arc(id, fresh);
        for (std::uint32_t q : net.out_arcs(fp)) net.add_arc(fresh, q);
        // Arcs from sibling ranks must follow too, or chains through the
        // copy would miss those subtrees.
        for (std::uint32_t c : std::set<std::uint32_t>(net.in_arcs(fp)))
            if (net.node(c).rank != l) net.add_arc(c, fresh);
    }
    net.node(id).content = std::move(Tl);
}

namespace {

template <class KeyArcs, class OtherArcs, class Link>
void merge_rank(ChordalNetwork& net, std::uint32_t l, KeyArcs key_arcs, OtherArcs other_arcs, Link link) {
    for (;;) {
        std::map<std::pair<std::string, std::set<std::uint32_t>>, std::uint32_t> seen;
        bool merged = false;
        const std::vector<std::uint32_t> ids = net.rank_nodes(l);
        for (std::uint32_t id : ids) {
            auto key = std::make_pair(content_key(net.node(id).content), key_arcs(id));
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(std::move(key), id);
                continue;
            }
            const std::uint32_t keep = it->second;
            for (std::uint32_t o : std::set<std::uint32_t>(other_arcs(id))) link(o, keep);
            net.remove_node(id);
            merged = true;
        }
        if (!merged) return;
    }
}

} // namespace

void merge_out(ChordalNetwork& net, std::uint32_t l) {
    merge_rank(
        net, l, [&](std::uint32_t id) { return net.out_arcs(id); }, [&](std::uint32_t id) { return net.in_arcs(id); },
        [&](std::uint32_t child, std::uint32_t keep) { net.add_arc(child, keep); });
}

void merge_in(ChordalNetwork& net, std::uint32_t l) {
    merge_rank(
        net, l, [&](std::uint32_t id) { return net.in_arcs(id); }, [&](std::uint32_t id) { return net.out_arcs(id); },
        [&](std::uint32_t par, std::uint32_t keep) { net.add_arc(keep, par); });
}

// --------------------------------------------------------------- Algorithm 1

void merge_all(ChordalNetwork& net) {
    for (;;) {
        const std::size_t before = net.node_count();
        for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) {
            merge_out(net, l);
            merge_in(net, l);
        }
        if (net.node_count() == before) return;
    }
}

ChordalNetwork chordal_triangularize(const std::vector<Poly>& F, const ChordalStructure& cs,
                                     const TriangularizeOptions& opt) {
    ChordalNetwork net = induced_network(F, cs);
    const Backend backend = opt.backend == Backend::Auto ? sniff_backend(F) : opt.backend;
    net.backend = backend;
    net.squarefree = opt.squarefree;
    const DecompOptions dopt{opt.squarefree, opt.groebner};
    unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());

    for (std::uint32_t l = 0; l < net.ranks(); ++l) {
        // Identical contents at one rank are decomposed once.
        const std::vector<std::uint32_t> ids = net.rank_nodes(l);
        std::vector<std::string> keys;
        std::unordered_map<std::string, std::vector<PolySystem>> done;
        std::vector<std::pair<std::string, const PolySystem*>> todo;
        for (std::uint32_t id : ids) {
            keys.push_back(content_key(net.node(id).content));
            if (done.emplace(keys.back(), std::vector<PolySystem>{}).second)
                todo.emplace_back(keys.back(), &net.node(id).content);
        }
        try {
            for (std::size_t start = 0; start < todo.size(); start += threads) {
                const std::size_t stop = std::min(todo.size(), start + threads);
                if (threads == 1 || stop - start == 1) {
                    for (std::size_t i = start; i < stop; ++i)
                        done[todo[i].first] = decompose_content(*todo[i].second, backend, dopt);
                    continue;
                }
                std::vector<std::future<std::vector<PolySystem>>> jobs;
                for (std::size_t i = start; i < stop; ++i)
                    jobs.push_back(std::async(std::launch::async, [&, i] {
                        return decompose_content(*todo[i].second, backend, dopt);
                    }));
                for (std::size_t i = start; i < stop; ++i) done[todo[i].first] = jobs[i - start].get();
            }
        } catch (const Error& e) {
            e.rethrow_with("rank " + std::to_string(l));
        }
        for (std::size_t i = 0; i < ids.size(); ++i) replace_node(net, ids[i], done[keys[i]]);
        net.prune();
        merge_out(net, l);
        if (net.parent[l] >= 0) {
            const std::vector<std::uint32_t> tri = net.rank_nodes(l);
            for (std::uint32_t id : tri) eliminate_node(net, id);
            net.prune();
            merge_out(net, static_cast<std::uint32_t>(net.parent[l]));
        }
        merge_in(net, l);
    }
    if (opt.strip) {
        net = strip_inequations(net);
        merge_all(net);
    }
    net.compact();
    return net;
}

// ------------------------------------------------------------------- chains

void for_each_chain(const ChordalNetwork& net, const std::function<bool(const Chain&)>& visit) {
    const std::size_t n = net.ranks();
    if (n == 0) return;
    Chain cur(n, UINT32_MAX);
    const long stop = static_cast<long>(net.lowest);
    std::function<bool(long)> rec = [&](long l) -> bool {
        if (l < stop) return visit(cur);
        const auto rank = static_cast<std::uint32_t>(l);
        const int p = net.parent[rank];
        std::vector<std::uint32_t> cands;
        if (p < 0) {
            cands = net.rank_nodes(rank);
        } else {
            for (std::uint32_t c : net.in_arcs(cur[static_cast<std::size_t>(p)]))
                if (net.node(c).rank == rank) cands.push_back(c);
        }
        for (std::uint32_t c : cands) {
            cur[rank] = c;
            if (!rec(l - 1)) return false;
        }
        return true;
    };
    rec(static_cast<long>(n) - 1);
}

std::vector<Chain> chains(const ChordalNetwork& net, std::size_t limit) {
    std::vector<Chain> out;
    if (limit == 0) return out;
    for_each_chain(net, [&](const Chain& c) {
        out.push_back(c);
        return out.size() < limit;
    });
    return out;
}

BigInt chain_count(const ChordalNetwork& net) {
    const auto ch = net.child_ranks();
    std::map<std::uint32_t, BigInt> cnt;
    BigInt total = 0;
    for (std::uint32_t l = net.lowest; l < net.ranks(); ++l)
        for (std::uint32_t id : net.rank_nodes(l)) {
            BigInt prod = 1;
            for (std::uint32_t c : ch[l]) {
                BigInt s = 0;
                for (std::uint32_t g : net.in_arcs(id))
                    if (net.node(g).rank == c) s += cnt[g];
                prod *= s;
            }
            cnt[id] = prod;
            if (net.parent[l] < 0) total += prod;
        }
    return total;
}

PolySystem chain_system(const ChordalNetwork& net, const Chain& c) {
    PolySystem s;
    for (std::uint32_t id : c) {
        if (id == UINT32_MAX) continue;
        const PolySystem& x = net.node(id).content;
        s.eqs.insert(s.eqs.end(), x.eqs.begin(), x.eqs.end());
        s.ineqs.insert(s.ineqs.end(), x.ineqs.begin(), x.ineqs.end());
    }
    return s;
}

ChordalNetwork strip_inequations(const ChordalNetwork& net) {
    ChordalNetwork out = net;
    for (std::uint32_t id : out.node_ids()) out.node(id).content.ineqs.clear();
    return out;
}

} // namespace chordnet
