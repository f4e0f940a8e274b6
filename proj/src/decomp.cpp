#include <chordnet/decomp.hpp>
#include <chordnet/unipoly.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace chordnet {

// ----------------------------------------------------------------- monomial

namespace {

using VarSet = std::vector<std::uint32_t>; // sorted

void covers(const std::vector<VarSet>& gens, std::size_t from, std::set<std::uint32_t>& chosen,
            std::set<VarSet>& out) {
    std::size_t k = from;
    while (k < gens.size()) {
        bool hit = false;
        for (std::uint32_t v : gens[k])
            if (chosen.count(v)) {
                hit = true;
                break;
            }
        if (!hit) break;
        ++k;
    }
    if (k == gens.size()) {
        out.insert(VarSet(chosen.begin(), chosen.end()));
        return;
    }
    for (std::uint32_t v : gens[k]) {
        chosen.insert(v);
        covers(gens, k + 1, chosen, out);
        chosen.erase(v);
    }
}

bool subset_of(const VarSet& a, const VarSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

} // namespace

std::vector<TriangularSet> tri_monomial(const std::vector<Poly>& F) {
    std::vector<VarSet> gens;
    Ring R;
    bool have_ring = false;
    for (const Poly& f : F) {
        if (f.is_zero()) continue;
        if (f.size() != 1) throw NotBinomial("tri_monomial expects single-term polynomials, got " + f.str());
        if (!have_ring) {
            R = f.ring();
            have_ring = true;
        }
        if (f.is_constant()) return {};
        gens.push_back(f.vars());
    }
    if (gens.empty()) return {TriangularSet{}};
    std::sort(gens.begin(), gens.end(), [](const VarSet& a, const VarSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::set<VarSet> all;
    std::set<std::uint32_t> chosen;
    covers(gens, 0, chosen, all);
    std::vector<VarSet> minimal;
    for (const VarSet& s : all) {
        bool dominated = false;
        for (const VarSet& o : all)
            if (o != s && subset_of(o, s)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), [](const VarSet& a, const VarSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<TriangularSet> out;
    for (const VarSet& s : minimal) {
        TriangularSet T;
        for (std::uint32_t v : s) T.push_back(Poly::variable(R, v));
        out.push_back(std::move(T));
    }
    return out;
}

// ----------------------------------------------------------------- binomial

namespace {

// x_k^d = c * (num / den), with num and den coprime monomials free of x_k.
struct PureRow {
    std::uint32_t d;
    Coeff c;
    std::map<std::uint32_t, long long> laurent; // exponent of each variable in num/den
};

class BinomialSolver {
public:
    BinomialSolver(const Ring& R, bool sqf) : R_(R), F_(R.p), sqf_(sqf) {}

    struct State {
        std::vector<Poly> eqs;
        std::set<std::uint32_t> zero;
        std::set<std::uint32_t> nonzero;
        std::vector<Poly> T;
    };

    void solve(State s) {
        for (;;) {
            switch (simplify(s)) {
            case Step::Dead: return;
            case Step::Branched: return;
            case Step::Done: break;
            }
            if (s.eqs.empty()) {
                emit(s);
                return;
            }
            if (!pivot(s)) return;
        }
    }

    std::vector<RegularSystem> take() {
        std::vector<RegularSystem> out;
        for (auto& r : out_)
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
        return out;
    }

private:
    enum class Step { Dead, Branched, Done };

    // Branches on "all of vs are nonzero" first, then on the vanishing of
    // their product.
    void branch(const State& s, const std::vector<std::uint32_t>& vs) {
        State a = s;
        a.nonzero.insert(vs.begin(), vs.end());
        solve(std::move(a));
        branch_zero(s, vs);
    }

    // Disjoint cases for "the product of vs is zero": the smallest variable
    // vanishes, or it is nonzero and the next one vanishes, and so on.
    void branch_zero(const State& s, std::vector<std::uint32_t> vs) {
        std::sort(vs.rbegin(), vs.rend());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            State b = s;
            b.zero.insert(vs[i]);
            b.nonzero.insert(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i));
            solve(std::move(b));
        }
    }

    std::vector<std::uint32_t> unknown_vars(const Monomial& m, const State& s) const {
        std::vector<std::uint32_t> out;
        for (const VarPow& vp : m.pairs())
            if (!s.nonzero.count(vp.var)) out.push_back(vp.var);
        return out;
    }

    Monomial drop_nonzero(const Monomial& m, const State& s) const {
        std::vector<VarPow> keep;
        for (const VarPow& vp : m.pairs())
            if (!s.nonzero.count(vp.var)) keep.push_back(vp);
        return Monomial::from_pairs(std::move(keep));
    }

    // Substitutes known zeros, discharges monomial equations and makes every
    // binomial coprime.
    Step simplify(State& s) {
        bool again = true;
        while (again) {
            again = false;
            std::vector<Poly> next;
            for (const Poly& e0 : s.eqs) {
                Poly e = e0;
                for (std::uint32_t z : s.zero)
                    if (e.has_var(z)) e = subst_eval(e, z, 0);
                if (e.is_zero()) continue;
                if (e.size() > 2) throw NotBinomial("equation with more than two terms: " + e.str());
                if (e.size() == 1) {
                    Monomial m = drop_nonzero(e.lead_monomial(), s);
                    if (m.is_one()) return Step::Dead;
                    if (m.pairs().size() == 1) {
                        s.zero.insert(m.pairs()[0].var);
                        again = true;
                        continue;
                    }
                    std::vector<std::uint32_t> vs;
                    for (const VarPow& vp : m.pairs()) vs.push_back(vp.var);
                    branch_zero(s, vs);
                    return Step::Branched;
                }
                const Term& t1 = e.terms()[0];
                const Term& t2 = e.terms()[1];
                Monomial g = gcd(t1.mono, t2.mono);
                Monomial gz = drop_nonzero(g, s);
                if (!gz.is_one()) {
                    std::vector<std::uint32_t> vs;
                    for (const VarPow& vp : gz.pairs()) vs.push_back(vp.var);
                    branch(s, vs);
                    return Step::Branched;
                }
                std::vector<Term> red{{t1.mono.quotient(g), t1.coeff}, {t2.mono.quotient(g), t2.coeff}};
                Poly r(R_, std::move(red));
                if (r.is_constant()) {
                    if (!r.is_zero()) return Step::Dead;
                    continue;
                }
                next.push_back(r.monic());
            }
            if (!again) s.eqs = std::move(next);
        }
        return Step::Done;
    }

    static std::map<std::uint32_t, long long> to_laurent(const Monomial& num, const Monomial& den) {
        std::map<std::uint32_t, long long> m;
        for (const VarPow& vp : num.pairs()) m[vp.var] += vp.exp;
        for (const VarPow& vp : den.pairs()) m[vp.var] -= vp.exp;
        return m;
    }

    Poly from_laurent(std::uint32_t k, std::uint32_t d, Coeff c, const std::map<std::uint32_t, long long>& L) const {
        std::vector<VarPow> num, den;
        for (auto [v, e] : L) {
            if (e > 0) num.push_back({v, static_cast<std::uint32_t>(e)});
            if (e < 0) den.push_back({v, static_cast<std::uint32_t>(-e)});
        }
        Monomial N = Monomial::from_pairs(num), D = Monomial::from_pairs(den);
        Monomial lhs = d > 0 ? D * Monomial::of(k, d) : D;
        std::vector<Term> terms{{lhs, 1}, {N, F_.neg(c)}};
        return Poly(R_, std::move(terms));
    }

    // Handles the largest variable still present; returns false when the
    // state was consumed by branching or found inconsistent.
    bool pivot(State& s) {
        std::uint32_t k = UINT32_MAX;
        for (const Poly& e : s.eqs) k = std::min(k, e.lead_monomial().top_var());
        std::vector<Poly> Bk, rest;
        for (const Poly& e : s.eqs) (e.has_var(k) ? Bk : rest).push_back(e);

        std::vector<PureRow> rows;
        std::vector<std::pair<Monomial, Monomial>> sides; // (M, N) per row
        for (const Poly& e : Bk) {
            // Coprime binomial: x_k sits in exactly one of the two terms.
            const Term* a = &e.terms()[0];
            const Term* b = &e.terms()[1];
            if (b->mono.degree(k) > 0) std::swap(a, b);
            const std::uint32_t d = a->mono.degree(k);
            Monomial M = a->mono.without(k);
            Monomial N = b->mono;
            Coeff c = F_.neg(F_.mul(b->coeff, F_.inv(a->coeff)));
            auto unknown = unknown_vars(M, s);
            if (!unknown.empty()) {
                branch(s, unknown);
                return false;
            }
            rows.push_back({d, c, to_laurent(N, M)});
            sides.emplace_back(M, N);
        }
        const bool need_rhs = Bk.size() >= 2 || s.nonzero.count(k) > 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!need_rhs && !(sqf_ && rows[i].d >= 2)) continue;
            auto unknown = unknown_vars(sides[i].second, s);
            if (!unknown.empty()) {
                branch(s, unknown);
                return false;
            }
        }
        // Euclid on the exponents of x_k: one pivot row survives, the others
        // turn into relations free of x_k.
        while (rows.size() >= 2) {
            std::sort(rows.begin(), rows.end(), [](const PureRow& x, const PureRow& y) { return x.d > y.d; });
            PureRow& a = rows[0];
            const PureRow& b = rows[1];
            a.d -= b.d;
            a.c = F_.mul(a.c, F_.inv(b.c));
            for (auto [v, e] : b.laurent) a.laurent[v] -= e;
            for (auto it = a.laurent.begin(); it != a.laurent.end();)
                it = it->second == 0 ? a.laurent.erase(it) : std::next(it);
            if (a.d == 0) {
                if (a.laurent.empty()) {
                    if (a.c != 1) return false;
                } else {
                    rest.push_back(from_laurent(k, 0, a.c, a.laurent).monic());
                }
                rows.erase(rows.begin());
            }
        }
        const PureRow& piv = rows[0];
        if (sqf_ && piv.d >= 2 && piv.d % R_.p == 0)
            throw InseparableDegree("binomial with main degree " + std::to_string(piv.d) + " divisible by p");
        s.T.push_back(from_laurent(k, piv.d, piv.c, piv.laurent).monic());
        s.nonzero.erase(k);
        s.eqs = std::move(rest);
        return true;
    }

    void emit(const State& s) {
        RegularSystem rs;
        rs.T = s.T;
        for (std::uint32_t z : s.zero) rs.T.push_back(Poly::variable(R_, z));
        std::sort(rs.T.begin(), rs.T.end(), [](const Poly& a, const Poly& b) { return a.mvar() < b.mvar(); });
        for (std::uint32_t v : s.nonzero) rs.U.push_back(Poly::variable(R_, v));
        out_.push_back(std::move(rs));
    }

    Ring R_;
    Field F_;
    bool sqf_;
    std::vector<RegularSystem> out_;
};

} // namespace

std::vector<RegularSystem> tri_binomial(const PolySystem& sys, const DecompOptions& opt) {
    Ring R;
    if (!sys.eqs.empty())
        R = sys.eqs.front().ring();
    else if (!sys.ineqs.empty())
        R = sys.ineqs.front().ring();
    BinomialSolver::State s;
    for (const Poly& h : sys.ineqs) {
        if (h.is_zero()) return {};
        if (h.size() != 1) throw NotBinomial("inequation is not a monomial: " + h.str());
        for (std::uint32_t v : h.vars()) s.nonzero.insert(v);
    }
    for (const Poly& f : sys.eqs) {
        if (f.size() > 2) throw NotBinomial("equation with more than two terms: " + f.str());
        if (!f.is_zero()) s.eqs.push_back(f);
    }
    BinomialSolver solver(R, opt.squarefree);
    solver.solve(std::move(s));
    return solver.take();
}

// ---------------------------------------------------------- saturation, primes

std::vector<Poly> sat_generators(const TriangularSet& T, const GroebnerOptions& opt) {
    if (T.empty()) return {};
    const Ring R = T.front().ring();
    bool all_unit = true;
    for (const Poly& t : T)
        if (!t.init().is_constant()) all_unit = false;
    if (all_unit) return buchberger_lex(T, opt);

    // Auxiliary variable y = x0 of an extended ring, larger than every x_i.
    const Ring Ry{R.n + 1, R.p};
    std::vector<std::uint32_t> up(R.n), down(R.n + 1, 0);
    for (std::uint32_t i = 0; i < R.n; ++i) {
        up[i] = i + 1;
        down[i + 1] = i;
    }
    std::vector<Poly> gens;
    Poly h = Poly::constant(Ry, 1);
    for (const Poly& t : T) {
        gens.push_back(t.relabel(up, Ry));
        h = h * t.init().relabel(up, Ry);
    }
    gens.push_back(Poly::variable(Ry, 0) * h - Poly::constant(Ry, 1));
    std::vector<Poly> out;
    for (const Poly& g : buchberger_lex(gens, opt))
        if (!g.has_var(0)) out.push_back(g.relabel(down, R));
    return out;
}

Primality is_prime_form(const TriangularSet& T0) {
    if (T0.empty()) return Primality::Prime;
    TriangularSet T = T0;
    std::sort(T.begin(), T.end(), [](const Poly& a, const Poly& b) { return a.mvar() < b.mvar(); });
    for (std::size_t i = 0; i + 1 < T.size(); ++i)
        if (T[i].mdeg() != 1) return Primality::Unknown;
    const Poly& t = T.back();
    const auto x = static_cast<std::uint32_t>(t.mvar());
    const std::uint32_t d = t.mdeg();
    const bool univariate = t.vars().size() == 1;
    if (univariate) {
        Field F(t.ring().p);
        return uni::is_irreducible(F, uni::from_poly(t, x)) ? Primality::Prime : Primality::NotPrime;
    }
    const bool primitive = content_in(t, x).is_constant();
    if (d == 1) return primitive ? Primality::Prime : Primality::Unknown;
    if (d == 2) {
        if (!primitive) return Primality::Unknown;
        Poly a = t.coeff_in(x, 2), b = t.coeff_in(x, 1), c = t.coeff_in(x, 0);
        Poly disc = b * b - (a * c).scale(4);
        return poly_sqrt(disc) ? Primality::NotPrime : Primality::Prime;
    }
    return Primality::Unknown;
}

const char* to_string(Primality p) {
    switch (p) {
    case Primality::Prime: return "prime";
    case Primality::NotPrime: return "not prime";
    case Primality::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace chordnet
