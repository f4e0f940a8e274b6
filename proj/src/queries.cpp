#include <chordnet/queries.hpp>

#include <algorithm>
#include <limits>
#include <set>

namespace chordnet {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

int root_rank(const ChordalNetwork& net) {
    for (std::size_t l = net.lowest; l < net.ranks(); ++l)
        if (net.parent[l] < 0) return static_cast<int>(l);
    return -1;
}

std::vector<std::uint32_t> in_from_rank(const ChordalNetwork& net, std::uint32_t id, std::uint32_t rank) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t g : net.in_arcs(id))
        if (net.node(g).rank == rank) out.push_back(g);
    return out;
}

// Uniform integer in [0, bound) with negligible bias.
BigInt random_below(const BigInt& bound, std::mt19937_64& rng) {
    const std::size_t bits = boost::multiprecision::msb(bound) + 1 + 64;
    BigInt r = 0;
    for (std::size_t got = 0; got < bits; got += 64) {
        r <<= 64;
        r += rng();
    }
    return r % bound;
}

std::uint32_t pick_weighted(const std::vector<std::uint32_t>& cands, const std::map<std::uint32_t, BigInt>& w,
                            std::mt19937_64& rng) {
    BigInt total = 0;
    for (std::uint32_t c : cands) total += w.at(c);
    BigInt r = random_below(total, rng);
    for (std::uint32_t c : cands) {
        if (r < w.at(c)) return c;
        r -= w.at(c);
    }
    return cands.back();
}

const Poly& single_equation(const ChordalNetwork& net, std::uint32_t id) {
    const Node& nd = net.node(id);
    if (nd.content.eqs.empty())
        throw NotZeroDimensionalNetwork("node " + std::to_string(id) + " at rank " + std::to_string(nd.rank) +
                                        " has no equation");
    if (!nd.content.ineqs.empty())
        throw NotZeroDimensionalNetwork("node " + std::to_string(id) + " carries inequations");
    const Poly& f = nd.content.eqs.front();
    if (nd.content.eqs.size() != 1 || f.mvar() != static_cast<int>(nd.rank))
        throw NotZeroDimensionalNetwork("node " + std::to_string(id) + " is not a single polynomial in x" +
                                        std::to_string(nd.rank));
    return f;
}

bool is_ancestor_or_self(const ChordalNetwork& net, std::uint32_t a, std::uint32_t l) {
    for (long k = l; k >= 0; k = net.parent[static_cast<std::size_t>(k)])
        if (static_cast<std::uint32_t>(k) == a) return true;
    return false;
}

std::vector<BigInt> add_vec(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// c[id][k] = number of chains below id (inclusive) with k equations.
std::map<std::uint32_t, std::vector<BigInt>> census_table(const ChordalNetwork& net) {
    const auto ch = net.child_ranks();
    std::map<std::uint32_t, std::vector<BigInt>> c;
    for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) {
        for (std::uint32_t id : net.rank_nodes(l)) {
            std::vector<BigInt> acc{1};
            for (std::uint32_t r : ch[l]) {
                std::vector<BigInt> sum;
                for (std::uint32_t g : in_from_rank(net, id, r)) sum = add_vec(std::move(sum), c.at(g));
                acc = convolve(acc, sum);
            }
            const std::size_t shift = net.node(id).content.eqs.size();
            if (!acc.empty()) acc.insert(acc.begin(), shift, BigInt(0));
            c[id] = std::move(acc);
        }
    }
    return c;
}

bool positive_at(const std::vector<BigInt>& v, std::size_t k) { return k < v.size() && v[k] > 0; }

} // namespace

ChordalNetwork eliminate_below(const ChordalNetwork& net, std::uint32_t l) {
    if (l >= net.ranks()) throw std::invalid_argument("rank " + std::to_string(l) + " is out of range");
    ChordalNetwork out = net;
    for (std::uint32_t id : out.node_ids())
        if (out.node(id).rank < l) out.remove_node(id);
    out.lowest = std::max(out.lowest, l);
    out.compact();
    return out;
}

std::map<std::uint32_t, BigInt> zero_weights(const ChordalNetwork& net) {
    const auto ch = net.child_ranks();
    std::map<std::uint32_t, BigInt> w;
    for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) {
        for (std::uint32_t id : net.rank_nodes(l)) {
            BigInt acc = single_equation(net, id).mdeg();
            for (std::uint32_t r : ch[l]) {
                BigInt s = 0;
                for (std::uint32_t g : in_from_rank(net, id, r)) s += w.at(g);
                acc *= s;
            }
            w[id] = acc;
        }
    }
    return w;
}

BigInt zero_count(const ChordalNetwork& net) {
    const int root = root_rank(net);
    if (root < 0) return 0;
    const auto w = zero_weights(net);
    BigInt total = 0;
    for (std::uint32_t id : net.rank_nodes(static_cast<std::uint32_t>(root))) total += w.at(id);
    return total;
}

std::vector<Coeff> sample(const ChordalNetwork& net, std::mt19937_64& rng) {
    const int root = root_rank(net);
    if (root < 0 || net.rank_nodes(static_cast<std::uint32_t>(root)).empty())
        throw NotZeroDimensionalNetwork("the network has no chains");
    const auto w = zero_weights(net);
    std::vector<std::uint32_t> chosen(net.ranks(), kNone);
    std::vector<Coeff> point(net.ranks(), 0);
    for (long ll = static_cast<long>(net.ranks()) - 1; ll >= static_cast<long>(net.lowest); --ll) {
        const auto l = static_cast<std::uint32_t>(ll);
        const int p = net.parent[l];
        const std::vector<std::uint32_t> cands =
            p < 0 ? net.rank_nodes(l) : in_from_rank(net, chosen[static_cast<std::size_t>(p)], l);
        const std::uint32_t id = pick_weighted(cands, w, rng);
        chosen[l] = id;
        Poly f = single_equation(net, id);
        for (std::uint32_t v : f.vars())
            if (v != l) f = subst_eval(f, v, point[v]);
        const std::vector<Coeff> roots = uni_rational_roots(f);
        if (roots.size() < f.mdeg())
            throw NonSplittingSpecialization("rank " + std::to_string(l) + ": " + f.str() + " has " +
                                             std::to_string(roots.size()) + " roots in GF(" +
                                             std::to_string(net.ring.p) + ")");
        std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
        point[l] = roots[pick(rng)];
    }
    return point;
}

bool radical_member(const ChordalNetwork& net, const Poly& h, std::mt19937_64& rng, const MemberOptions& opt) {
    if (!(h.ring() == net.ring)) throw RingMismatch("polynomial and network live in different rings");
    const int root = root_rank(net);
    if (root < 0) return true;

    std::uint32_t q = 1;
    for (std::uint32_t id : net.node_ids()) {
        const PolySystem& s = net.node(id).content;
        if (s.eqs.size() > 1 || (s.eqs.size() == 1 && s.eqs[0].mvar() != static_cast<int>(net.node(id).rank)))
            throw NotTriangularNetwork("node " + std::to_string(id) + " is not triangular");
        if (!s.eqs.empty()) q = std::max(q, s.eqs[0].mdeg());
    }
    const std::uint64_t need = 2ull * net.active_ranks() * q;
    if (net.ring.p < need)
        throw FieldTooSmall("p = " + std::to_string(net.ring.p) + " is below 2nq = " + std::to_string(need));

    // Split h by main variable; every term must live on the path from its main
    // variable to the root.
    std::vector<Poly> part(net.ranks(), Poly(net.ring));
    for (const Term& t : h.terms()) {
        const std::uint32_t m = t.mono.is_one() ? static_cast<std::uint32_t>(root) : t.mono.top_var();
        if (m < net.lowest)
            throw UnsupportedPolynomial("x" + std::to_string(m) + " is not a variable of the network");
        for (const VarPow& vp : t.mono.pairs())
            if (!is_ancestor_or_self(net, vp.var, m))
                throw UnsupportedPolynomial("term " + Poly(net.ring, {t}).str() +
                                            " does not lie on a path of the elimination tree");
        part[m] += Poly(net.ring, {t});
    }

    const Field F = net.ring.field();
    const auto ch = net.child_ranks();
    std::uniform_int_distribution<Coeff> coin(0, net.ring.p - 1);

    for (unsigned trial = 0; trial < opt.trials; ++trial) {
        std::map<std::uint32_t, Poly> H;
        for (std::uint32_t id : net.node_ids()) H[id] = part[net.node(id).rank];
        for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) {
            const Coeff xl = coin(rng);
            for (std::uint32_t id : net.rank_nodes(l)) {
                Poly P = H[id];
                const auto& eqs = net.node(id).content.eqs;
                if (!eqs.empty()) P = eqs[0].init().is_constant() ? normal_form(P, {eqs[0]}) : prem(P, eqs[0]);
                H[id] = subst_eval(P, l, xl);
            }
            const int p = net.parent[l];
            if (p < 0) continue;
            for (std::uint32_t fp : net.rank_nodes(static_cast<std::uint32_t>(p))) {
                const auto kids = in_from_rank(net, fp, l);
                if (kids.empty()) continue;
                std::vector<Coeff> r(kids.size());
                Coeff sum = 0;
                do {
                    sum = 0;
                    for (auto& x : r) {
                        x = kids.size() == 1 ? 1 : coin(rng);
                        sum = F.add(sum, x);
                    }
                } while (sum == 0);
                const Coeff inv = F.inv(sum);
                for (std::size_t i = 0; i < kids.size(); ++i)
                    H[fp] += H[kids[i]].scale(F.mul(r[i], inv));
            }
        }
        for (std::uint32_t id : net.rank_nodes(static_cast<std::uint32_t>(root)))
            if (!H[id].is_zero()) return false;
    }
    return true;
}

std::map<std::uint32_t, std::uint32_t> shortest_weights(const ChordalNetwork& net) {
    const auto ch = net.child_ranks();
    std::map<std::uint32_t, std::uint32_t> ell;
    for (std::uint32_t l = net.lowest; l < net.ranks(); ++l) {
        for (std::uint32_t id : net.rank_nodes(l)) {
            auto acc = static_cast<std::uint32_t>(net.node(id).content.eqs.size());
            for (std::uint32_t r : ch[l]) {
                std::uint32_t best = kNone;
                for (std::uint32_t g : in_from_rank(net, id, r)) best = std::min(best, ell.at(g));
                acc += best;
            }
            ell[id] = acc;
        }
    }
    return ell;
}

long dimension(const ChordalNetwork& net) {
    const int root = root_rank(net);
    if (root < 0 || net.rank_nodes(static_cast<std::uint32_t>(root)).empty()) return -1;
    const auto ell = shortest_weights(net);
    std::uint32_t best = kNone;
    for (std::uint32_t id : net.rank_nodes(static_cast<std::uint32_t>(root))) best = std::min(best, ell.at(id));
    return static_cast<long>(net.active_ranks()) - static_cast<long>(best);
}

ChordalNetwork top_component(const ChordalNetwork& net) {
    ChordalNetwork out = net;
    const int root = root_rank(net);
    if (root < 0 || net.rank_nodes(static_cast<std::uint32_t>(root)).empty()) return out;
    const auto ell = shortest_weights(net);
    const auto ch = net.child_ranks();

    std::set<std::uint32_t> keep;
    std::set<std::pair<std::uint32_t, std::uint32_t>> keep_arcs;
    std::uint32_t best = kNone;
    for (std::uint32_t id : net.rank_nodes(static_cast<std::uint32_t>(root))) best = std::min(best, ell.at(id));
    for (std::uint32_t id : net.rank_nodes(static_cast<std::uint32_t>(root)))
        if (ell.at(id) == best) keep.insert(id);

    // Parents have larger ranks, so a descending sweep sees every kept node
    // before its children are decided.
    for (long ll = root; ll >= static_cast<long>(net.lowest); --ll) {
        const auto l = static_cast<std::uint32_t>(ll);
        for (std::uint32_t id : net.rank_nodes(l)) {
            if (!keep.count(id)) continue;
            for (std::uint32_t r : ch[l]) {
                const auto kids = in_from_rank(net, id, r);
                std::uint32_t m = kNone;
                for (std::uint32_t g : kids) m = std::min(m, ell.at(g));
                for (std::uint32_t g : kids)
                    if (ell.at(g) == m) {
                        keep.insert(g);
                        keep_arcs.insert({g, id});
                    }
            }
        }
    }
    for (const auto& [c, p] : net.arcs())
        if (!keep_arcs.count({c, p})) out.remove_arc(c, p);
    for (std::uint32_t id : net.node_ids())
        if (!keep.count(id)) out.remove_node(id);
    out.prune();
    merge_all(out);
    out.compact();
    return out;
}

std::map<long, BigInt> dim_census(const ChordalNetwork& net) {
    std::map<long, BigInt> out;
    const int root = root_rank(net);
    if (root < 0) return out;
    const auto c = census_table(net);
    std::vector<BigInt> total;
    for (std::uint32_t id : net.rank_nodes(static_cast<std::uint32_t>(root))) total = add_vec(total, c.at(id));
    const auto n = static_cast<long>(net.active_ranks());
    for (std::size_t k = 0; k < total.size(); ++k)
        if (total[k] > 0) out[n - static_cast<long>(k)] = total[k];
    return out;
}

void isolate_dim(const ChordalNetwork& net, long d, const std::function<bool(const Chain&)>& visit) {
    const int root = root_rank(net);
    const auto n = static_cast<long>(net.active_ranks());
    if (root < 0 || d < 0 || d > n) return;
    const auto c = census_table(net);
    const auto ch = net.child_ranks();

    struct Task {
        std::uint32_t rank;
        std::uint32_t parent_node;
        std::size_t budget;
    };
    Chain cur(net.ranks(), kNone);

    std::function<bool(std::vector<Task>)> run;
    // Distributes `left` equations over the child ranks kids[i..] of node g.
    std::function<bool(std::uint32_t, const std::vector<std::uint32_t>&, std::size_t, std::size_t,
                       std::vector<Task>&, const std::vector<std::vector<BigInt>>&)>
        split = [&](std::uint32_t g, const std::vector<std::uint32_t>& kids, std::size_t i, std::size_t left,
                    std::vector<Task>& tasks, const std::vector<std::vector<BigInt>>& avail) -> bool {
        if (i == kids.size()) return left != 0 || run(tasks);
        for (std::size_t b = 0; b <= left; ++b) {
            if (!positive_at(avail[i], b)) continue;
            tasks.push_back({kids[i], g, b});
            const bool go = split(g, kids, i + 1, left - b, tasks, avail);
            tasks.pop_back();
            if (!go) return false;
        }
        return true;
    };
    run = [&](std::vector<Task> tasks) -> bool {
        if (tasks.empty()) return visit(cur);
        const Task t = tasks.back();
        tasks.pop_back();
        const std::vector<std::uint32_t> cands =
            t.parent_node == kNone ? net.rank_nodes(t.rank) : in_from_rank(net, t.parent_node, t.rank);
        for (std::uint32_t g : cands) {
            if (!positive_at(c.at(g), t.budget)) continue;
            cur[t.rank] = g;
            const std::size_t own = net.node(g).content.eqs.size();
            const auto& kids = ch[t.rank];
            std::vector<std::vector<BigInt>> avail;
            for (std::uint32_t r : kids) {
                std::vector<BigInt> s;
                for (std::uint32_t x : in_from_rank(net, g, r)) s = add_vec(s, c.at(x));
                avail.push_back(std::move(s));
            }
            if (!split(g, kids, 0, t.budget - own, tasks, avail)) return false;
        }
        cur[t.rank] = kNone;
        return true;
    };
    run({Task{static_cast<std::uint32_t>(root), kNone, static_cast<std::size_t>(n - d)}});
}

std::vector<Chain> chains_of_dim(const ChordalNetwork& net, long d, std::size_t limit) {
    std::vector<Chain> out;
    if (limit == 0) return out;
    isolate_dim(net, d, [&](const Chain& c) {
        out.push_back(c);
        return out.size() < limit;
    });
    return out;
}

std::vector<PrimeComponent> minimal_primes(const ChordalNetwork& net, const PrimeOptions& opt) {
    std::vector<PrimeComponent> found;
    if (opt.max_count == 0) return found;
    const auto census = dim_census(net);
    for (auto it = census.rbegin(); it != census.rend(); ++it) {
        const long d = it->first;
        if (opt.min_dim && d < *opt.min_dim) break;
        bool stop = false;
        isolate_dim(net, d, [&](const Chain& c) {
            TriangularSet T = chain_system(net, c).eqs;
            std::sort(T.begin(), T.end(), [](const Poly& a, const Poly& b) { return a.mvar() < b.mvar(); });
            const Primality pr = is_prime_form(T);
            if (pr != Primality::Prime) {
                std::string s;
                for (const Poly& t : T) s += (s.empty() ? "" : ", ") + t.str();
                throw PrimalityUnknown("chain (" + s + ") is " + (pr == Primality::NotPrime ? "not" : "not known to be") +
                                       " in prime form");
            }
            for (const PrimeComponent& P : found) {
                bool contained = true;
                for (const Poly& g : P.generators)
                    if (!prem_chain(g, T).is_zero()) {
                        contained = false;
                        break;
                    }
                if (contained) return true;
            }
            std::vector<Poly> gens = T.empty() ? std::vector<Poly>{} : sat_generators(T, opt.groebner);
            found.push_back({d, T, std::move(gens)});
            stop = found.size() >= opt.max_count;
            return !stop;
        });
        if (stop) break;
    }
    return found;
}

} // namespace chordnet
