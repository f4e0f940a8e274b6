// Zero-dimensional triangular decomposition: lex Groebner basis followed by
// a tower built from the smallest variable upward, splitting the tower
// whenever a leading coefficient turns out to be a zero divisor.

#include <chordnet/decomp.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chordnet {

namespace {

using Tower = std::map<std::uint32_t, Poly>;

std::vector<Poly> members(const Tower& T) {
    std::vector<Poly> v;
    v.reserve(T.size());
    for (const auto& [var, t] : T) v.push_back(t);
    return v;
}

Tower below(const Tower& T, std::uint32_t w) {
    Tower out;
    for (auto it = T.upper_bound(w); it != T.end(); ++it) out.insert(*it);
    return out;
}

Poly var_power(const Ring& R, std::uint32_t v, std::uint32_t e) { return Poly::variable(R, v, e); }

Poly derivative(const Poly& a, std::uint32_t v) {
    Field F(a.ring().p);
    std::vector<Term> out;
    for (const Term& t : a.terms()) {
        std::uint32_t e = t.mono.degree(v);
        if (e == 0) continue;
        Coeff c = F.mul(t.coeff, F.from_int(e));
        if (c != 0) out.push_back({t.mono.with_degree(v, e - 1), c});
    }
    return Poly(a.ring(), std::move(out));
}

// Raised when a polynomial of the tower factors as first * second with
// coprime factors; each factor yields one branch.
struct TowerSplit {
    std::uint32_t var;
    Poly first;
    Poly second;
};

class TowerArith {
public:
    explicit TowerArith(const Ring& R) : R_(R), F_(R.p) {}

    Poly reduce(const Poly& a, const Tower& T) const {
        if (T.empty() || a.is_zero()) return a;
        return normal_form(a, members(T));
    }

    // Quotient and remainder by b, which must be monic in v.
    void divrem(const Poly& a, const Poly& b, std::uint32_t v, const Tower& T, Poly& q, Poly& r) const {
        r = reduce(a, T);
        q = Poly(R_);
        const std::uint32_t e = b.degree(v);
        while (!r.is_zero()) {
            const std::uint32_t d = r.degree(v);
            if (d < e) break;
            Poly m = r.coeff_in(v, d) * var_power(R_, v, d - e);
            q += m;
            r = reduce(r - m * b, T);
        }
    }

    // Inverse of c modulo the tower. c must be reduced and nonzero; throws
    // TowerSplit when c is a zero divisor.
    Poly inverse(const Poly& c, const Tower& T) const {
        if (c.is_constant()) return Poly::constant(R_, F_.inv(c.constant_value()));
        const auto w = static_cast<std::uint32_t>(c.mvar());
        auto it = T.find(w);
        if (it == T.end()) throw std::logic_error("inverse: variable x" + std::to_string(w) + " is not in the tower");
        const Poly& t = it->second;
        const Tower Tb = below(T, w);

        Poly r0 = t, s0(R_), r1 = c, s1 = Poly::constant(R_, 1);
        while (!r1.is_zero()) {
            const std::uint32_t d = r1.degree(w);
            if (d == 0) {
                Poly inv = inverse(r1, Tb);
                return reduce(s1 * inv, T);
            }
            Poly li = inverse(r1.coeff_in(w, d), Tb);
            r1 = reduce(r1 * li, Tb);
            s1 = reduce(s1 * li, T);
            Poly q, r2;
            divrem(r0, r1, w, Tb, q, r2);
            Poly s2 = reduce(s0 - q * s1, T);
            r0 = std::move(r1);
            s0 = std::move(s1);
            r1 = std::move(r2);
            s1 = std::move(s2);
        }
        // r0 is a proper monic factor of t shared with c.
        Poly g = r0;
        Poly h, rem;
        divrem(t, g, w, Tb, h, rem);
        // Strip common factors so the two branches are disjoint even when t
        // carries multiplicities.
        for (;;) {
            Poly d = gcd(g, h, w, Tb);
            if (d.degree(w) == 0) break;
            Poly q2;
            divrem(h, d, w, Tb, q2, rem);
            h = q2;
        }
        Poly g_full;
        divrem(t, h, w, Tb, g_full, rem);
        throw TowerSplit{w, g_full, h};
    }

    // Returns zero, the constant 1 (a unit), or a polynomial whose
    // coefficient of the top power of v is 1.
    Poly normalize(const Poly& a0, std::uint32_t v, const Tower& T) const {
        Poly a = reduce(a0, T);
        if (a.is_zero()) return a;
        const std::uint32_t d = a.degree(v);
        Poly lc = a.coeff_in(v, d);
        Poly inv = lc.is_constant() ? Poly::constant(R_, F_.inv(lc.constant_value())) : inverse(lc, T);
        if (d == 0) return Poly::constant(R_, 1);
        return reduce(a * inv, T);
    }

    Poly gcd(Poly a, Poly b, std::uint32_t v, const Tower& T) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree(v) < b.degree(v)) std::swap(a, b);
        while (!b.is_zero()) {
            if (b.degree(v) == 0) return Poly::constant(R_, 1);
            Poly q, r;
            divrem(a, b, v, T, q, r);
            a = std::move(b);
            b = normalize(r, v, T);
        }
        return a;
    }

    Poly squarefree(const Poly& a, std::uint32_t v, const Tower& T) const {
        const std::uint32_t d = a.degree(v);
        auto refuse = [&] {
            throw InseparableDegree("main degree " + std::to_string(d) + " of x" + std::to_string(v) +
                                    " is too large for p = " + std::to_string(R_.p));
        };
        if (d > R_.p) refuse();
        if (d <= 1) return a;
        Poly da = normalize(derivative(a, v), v, T);
        // At degree exactly p the only inseparable case is (x - c)^p, whose
        // derivative vanishes.
        if (da.is_zero()) refuse();
        Poly g = gcd(a, da, v, T);
        if (g.degree(v) == 0) return a;
        Poly q, r;
        divrem(a, g, v, T, q, r);
        return q;
    }

    Tower apply_split(Tower T, std::uint32_t w, const Poly& f) const {
        T[w] = f;
        // Entries of larger variables (smaller index) must be reduced again
        // modulo the new lower tower, largest index first.
        std::vector<std::uint32_t> upper;
        for (const auto& [var, t] : T)
            if (var < w) upper.push_back(var);
        std::sort(upper.rbegin(), upper.rend());
        for (std::uint32_t u : upper) T[u] = reduce(T[u], below(T, u));
        return T;
    }

private:
    Ring R_;
    Field F_;
};

class ZeroDimSolver {
public:
    ZeroDimSolver(const Ring& R, std::vector<Poly> G, std::vector<Poly> F, std::vector<std::uint32_t> vars, bool sqf)
        : ar_(R), G_(std::move(G)), F_(std::move(F)), vars_(std::move(vars)), sqf_(sqf) {}

    std::vector<TriangularSet> run() {
        process(Tower{}, 0);
        return std::move(out_);
    }

private:
    void process(const Tower& T, std::size_t pos) {
        if (pos == vars_.size()) {
            out_.push_back(members(T));
            return;
        }
        const std::uint32_t v = vars_[pos];
        Tower next;
        try {
            std::vector<Poly> cands;
            for (const Poly& g : G_)
                if (g.mvar() == static_cast<int>(v)) cands.push_back(g);
            for (const Poly& f : F_)
                if (f.mvar() == static_cast<int>(v) && std::find(cands.begin(), cands.end(), f) == cands.end())
                    cands.push_back(f);
            std::vector<Poly> norm;
            for (const Poly& f : cands) {
                Poly a = ar_.normalize(f, v, T);
                if (a.is_zero()) continue;
                if (a.degree(v) == 0) return; // a unit: this branch is empty
                norm.push_back(std::move(a));
            }
            if (norm.empty())
                throw NotZeroDimensional("variable x" + std::to_string(v) + " is unconstrained on a branch");
            Poly g = norm[0];
            for (std::size_t i = 1; i < norm.size(); ++i) {
                g = ar_.gcd(g, norm[i], v, T);
                if (g.degree(v) == 0) return;
            }
            if (sqf_) g = ar_.squarefree(g, v, T);
            next = T;
            next[v] = g;
        } catch (const TowerSplit& s) {
            process(ar_.apply_split(T, s.var, s.first), pos);
            process(ar_.apply_split(T, s.var, s.second), pos);
            return;
        }
        process(next, pos + 1);
    }

    TowerArith ar_;
    std::vector<Poly> G_;
    std::vector<Poly> F_;
    std::vector<std::uint32_t> vars_;
    bool sqf_;
    std::vector<TriangularSet> out_;
};

} // namespace

std::vector<TriangularSet> tri_zero_dim(const std::vector<Poly>& F0, const DecompOptions& opt) {
    std::vector<Poly> F;
    for (const Poly& f : F0)
        if (!f.is_zero()) F.push_back(f);
    if (F.empty()) return {TriangularSet{}};
    const Ring R = F.front().ring();

    std::vector<Poly> G = buchberger_lex(F, opt.groebner);
    if (G.size() == 1 && G[0].is_constant()) return {};

    std::set<std::uint32_t> vs;
    for (const Poly& f : F)
        for (std::uint32_t v : f.vars()) vs.insert(v);
    for (std::uint32_t v : vs) {
        bool head = false;
        for (const Poly& g : G) {
            const auto& pr = g.lead_monomial().pairs();
            if (pr.size() == 1 && pr[0].var == v) head = true;
        }
        if (!head) throw NotZeroDimensional("no univariate leading monomial in x" + std::to_string(v));
    }
    // Smallest variable (largest index) first.
    std::vector<std::uint32_t> order(vs.rbegin(), vs.rend());
    return ZeroDimSolver(R, std::move(G), std::move(F), std::move(order), opt.squarefree).run();
}

std::uint64_t degree_of(const TriangularSet& T) {
    std::uint64_t d = 1;
    for (const Poly& t : T) d *= t.mdeg();
    return d;
}

} // namespace chordnet
