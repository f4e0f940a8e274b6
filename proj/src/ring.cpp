#include <chordnet/ring.hpp>
#include <chordnet/unipoly.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace chordnet {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

Ring make_ring(std::size_t n, std::uint64_t p) {
    if (p < 3 || p > 0x7fffffffULL || !is_prime(p))
        throw NonPrimeModulus("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
    return Ring{n, static_cast<Coeff>(p)};
}

Coeff Field::pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff r = 1 % p_;
    Coeff b = a % p_;
    while (e > 0) {
        if (e & 1U) r = mul(r, b);
        b = mul(b, b);
        e >>= 1U;
    }
    return r;
}

Coeff Field::inv(Coeff a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
}

Coeff Field::from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(std::uint32_t var, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.f_.push_back({var, exp});
    return m;
}

Monomial Monomial::from_pairs(std::vector<VarPow> pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
    Monomial m;
    for (const VarPow& vp : pairs) {
        if (vp.exp == 0) continue;
        if (!m.f_.empty() && m.f_.back().var == vp.var)
            m.f_.back().exp += vp.exp;
        else
            m.f_.push_back(vp);
    }
    return m;
}

std::uint32_t Monomial::degree(std::uint32_t var) const noexcept {
    for (const VarPow& vp : f_) {
        if (vp.var == var) return vp.exp;
        if (vp.var > var) break;
    }
    return 0;
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t s = 0;
    for (const VarPow& vp : f_) s += vp.exp;
    return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    std::size_t j = 0;
    for (const VarPow& vp : f_) {
        while (j < other.f_.size() && other.f_[j].var < vp.var) ++j;
        if (j == other.f_.size() || other.f_[j].var != vp.var || other.f_[j].exp < vp.exp) return false;
        ++j;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].var < o.f_[j].var)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].var < f_[i].var) {
            r.f_.push_back(o.f_[j++]);
        } else {
            r.f_.push_back({f_[i].var, f_[i].exp + o.f_[j].exp});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
    Monomial r;
    std::size_t j = 0;
    for (const VarPow& vp : f_) {
        std::uint32_t e = vp.exp;
        if (j < d.f_.size() && d.f_[j].var == vp.var) e -= d.f_[j++].exp;
        if (e > 0) r.f_.push_back({vp.var, e});
    }
    return r;
}

Monomial Monomial::without(std::uint32_t var) const {
    Monomial r;
    for (const VarPow& vp : f_)
        if (vp.var != var) r.f_.push_back(vp);
    return r;
}

Monomial Monomial::with_degree(std::uint32_t var, std::uint32_t exp) const {
    std::vector<VarPow> pairs;
    for (const VarPow& vp : f_)
        if (vp.var != var) pairs.push_back(vp);
    pairs.push_back({var, exp});
    return from_pairs(std::move(pairs));
}

bool Monomial::coprime(const Monomial& o) const noexcept {
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].var == o.f_[j].var) return false;
        if (f_[i].var < o.f_[j].var)
            ++i;
        else
            ++j;
    }
    return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    std::size_t i = 0;
    while (i < a.f_.size() && i < b.f_.size()) {
        // A smaller index is a larger variable: the side that owns it wins.
        if (a.f_[i].var != b.f_[i].var)
            return a.f_[i].var < b.f_[i].var ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.f_[i].exp != b.f_[i].exp) return a.f_[i].exp <=> b.f_[i].exp;
        ++i;
    }
    return a.f_.size() <=> b.f_.size();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<VarPow> pairs = a.pairs();
    for (const VarPow& vp : b.pairs()) {
        std::uint32_t e = a.degree(vp.var);
        if (vp.exp > e) pairs.push_back({vp.var, vp.exp - e});
    }
    return Monomial::from_pairs(std::move(pairs));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<VarPow> pairs;
    for (const VarPow& vp : a.pairs()) {
        std::uint32_t e = std::min(vp.exp, b.degree(vp.var));
        if (e > 0) pairs.push_back({vp.var, e});
    }
    return Monomial::from_pairs(std::move(pairs));
}

// -------------------------------------------------------------------- Poly

namespace {

void normalize_terms(const Field& F, std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = F.add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms = std::move(out);
}

// Merges two sorted term lists computing a + c*b.
std::vector<Term> merge_axpy(const Field& F, const std::vector<Term>& a, const std::vector<Term>& b, Coeff c) {
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            r.push_back(a[i++]);
            continue;
        }
        if (i == a.size()) {
            Coeff v = F.mul(c, b[j].coeff);
            if (v != 0) r.push_back({b[j].mono, v});
            ++j;
            continue;
        }
        auto cmp = a[i].mono <=> b[j].mono;
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            Coeff v = F.mul(c, b[j].coeff);
            if (v != 0) r.push_back({b[j].mono, v});
            ++j;
        } else {
            Coeff v = F.add(a[i].coeff, F.mul(c, b[j].coeff));
            if (v != 0) r.push_back({a[i].mono, v});
            ++i;
            ++j;
        }
    }
    return r;
}

void check_same_ring(const Ring& a, const Ring& b) {
    if (a.p != b.p) throw RingMismatch("polynomials over different fields");
}

} // namespace

Poly::Poly(const Ring& r, std::vector<Term> terms) : ring_(r), terms_(std::move(terms)) {
    Field F(r.p);
    for (Term& t : terms_) t.coeff %= r.p;
    normalize_terms(F, terms_);
}

Poly Poly::constant(const Ring& r, Coeff c) {
    Poly f(r);
    c %= r.p;
    if (c != 0) f.terms_.push_back({Monomial{}, c});
    return f;
}

Poly Poly::variable(const Ring& r, std::uint32_t var, std::uint32_t exp) {
    return monomial(r, Monomial::of(var, exp), 1);
}

Poly Poly::monomial(const Ring& r, Monomial m, Coeff c) {
    Poly f(r);
    c %= r.p;
    if (c != 0) f.terms_.push_back({std::move(m), c});
    return f;
}

Coeff Poly::constant_value() const noexcept {
    if (terms_.empty()) return 0;
    return terms_.back().mono.is_one() ? terms_.back().coeff : 0;
}

int Poly::mvar() const noexcept {
    if (terms_.empty() || terms_[0].mono.is_one()) return -1;
    // The lex-leading term always contains the largest variable.
    return static_cast<int>(terms_[0].mono.top_var());
}

std::uint32_t Poly::mdeg() const {
    int v = mvar();
    if (v < 0) return 0;
    return terms_[0].mono.degree(static_cast<std::uint32_t>(v));
}

Poly Poly::init() const {
    int v = mvar();
    if (v < 0) return *this;
    return coeff_in(static_cast<std::uint32_t>(v), mdeg());
}

std::uint32_t Poly::degree(std::uint32_t var) const noexcept {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree(var));
    return d;
}

Poly Poly::coeff_in(std::uint32_t var, std::uint32_t d) const {
    std::vector<Term> out;
    for (const Term& t : terms_)
        if (t.mono.degree(var) == d) out.push_back({t.mono.without(var), t.coeff});
    // Removing one variable from every selected term keeps them distinct,
    // and the relative order only needs a re-sort when var is not the top.
    Poly r(ring_);
    r.terms_ = std::move(out);
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    return r;
}

bool Poly::has_var(std::uint32_t var) const noexcept {
    for (const Term& t : terms_)
        if (t.mono.degree(var) > 0) return true;
    return false;
}

std::vector<std::uint32_t> Poly::vars() const {
    std::set<std::uint32_t> s;
    for (const Term& t : terms_)
        for (const VarPow& vp : t.mono.pairs()) s.insert(vp.var);
    return {s.begin(), s.end()};
}

Poly Poly::operator-() const {
    Field F(ring_.p);
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly r(ring_);
    r.terms_ = merge_axpy(Field(ring_.p), terms_, o.terms_, 1);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly r(ring_);
    r.terms_ = merge_axpy(Field(ring_.p), terms_, o.terms_, ring_.p - 1);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    Field F(ring_.p);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) all.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
    Poly r(ring_);
    r.terms_ = std::move(all);
    normalize_terms(F, r.terms_);
    return r;
}

Poly Poly::scale(Coeff c) const {
    Field F(ring_.p);
    c %= ring_.p;
    if (c == 0) return Poly(ring_);
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
}

Poly Poly::mul_term(const Monomial& m, Coeff c) const {
    Field F(ring_.p);
    Poly r(ring_);
    c %= ring_.p;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a fixed monomial preserves the lex order.
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = constant(ring_, 1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e > 0) b = b * b;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead_coeff() == 1) return *this;
    return scale(Field(ring_.p).inv(lead_coeff()));
}

Coeff Poly::evaluate(const std::vector<Coeff>& point) const {
    Field F(ring_.p);
    Coeff s = 0;
    for (const Term& t : terms_) {
        Coeff v = t.coeff;
        for (const VarPow& vp : t.mono.pairs()) v = F.mul(v, F.pow(point.at(vp.var), vp.exp));
        s = F.add(s, v);
    }
    return s;
}

Poly Poly::relabel(const std::vector<std::uint32_t>& to, const Ring& target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<VarPow> pairs;
        for (const VarPow& vp : t.mono.pairs()) pairs.push_back({to.at(vp.var), vp.exp});
        out.push_back({Monomial::from_pairs(std::move(pairs)), t.coeff});
    }
    return Poly(target, std::move(out));
}

Poly Poly::with_ring(const Ring& target) const {
    Poly r = *this;
    r.ring_ = target;
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const Coeff p = ring_.p;
    bool first = true;
    for (const Term& t : terms_) {
        bool negative = t.coeff > p / 2;
        Coeff mag = negative ? p - t.coeff : t.coeff;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        bool need_star = false;
        if (mag != 1 || t.mono.is_one()) {
            s += std::to_string(mag);
            need_star = true;
        }
        for (const VarPow& vp : t.mono.pairs()) {
            if (need_star) s += '*';
            s += 'x' + std::to_string(vp.var);
            if (vp.exp != 1) s += '^' + std::to_string(vp.exp);
            need_star = true;
        }
    }
    return s;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
        if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

void PolySystem::canonicalize() {
    auto clean = [](std::vector<Poly>& v) {
        std::vector<Poly> out;
        for (const Poly& f : v)
            if (!f.is_zero()) out.push_back(f.monic());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        v = std::move(out);
    };
    clean(eqs);
    clean(ineqs);
}

// --------------------------------------------------------- core algorithms

MainInfo mvar_init_mdeg(const Poly& f) {
    if (f.mvar() < 0) throw ConstantPolynomial("polynomial " + f.str() + " has no variables");
    return {static_cast<std::uint32_t>(f.mvar()), f.init(), f.mdeg()};
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
    const Ring& R = f.ring();
    Field F(R.p);
    std::vector<const Poly*> divs;
    for (const Poly& g : G)
        if (!g.is_zero()) divs.push_back(&g);
    std::vector<Term> rest;
    std::vector<Term> cur = f.terms();
    std::size_t head = 0;
    // cur[head..] holds the part still to be reduced.
    while (head < cur.size()) {
        const Term lt = cur[head];
        const Poly* hit = nullptr;
        for (const Poly* g : divs)
            if (g->lead_monomial().divides(lt.mono)) {
                hit = g;
                break;
            }
        if (!hit) {
            rest.push_back(lt);
            ++head;
            continue;
        }
        Coeff c = F.neg(F.mul(lt.coeff, F.inv(hit->lead_coeff())));
        Poly shifted = hit->mul_term(lt.mono.quotient(hit->lead_monomial()), 1);
        std::vector<Term> tail(cur.begin() + static_cast<std::ptrdiff_t>(head), cur.end());
        cur = merge_axpy(F, tail, shifted.terms(), c);
        head = 0;
    }
    return Poly(R, std::move(rest));
}

Poly prem(const Poly& f, const Poly& g) {
    const int xv = g.mvar();
    if (xv < 0) throw ConstantPolynomial("prem by a constant");
    const auto x = static_cast<std::uint32_t>(xv);
    const std::uint32_t e = g.mdeg();
    const std::uint32_t d = f.degree(x);
    if (f.is_zero() || d < e) return f;
    const Poly I = g.init();
    Poly r = f;
    std::uint32_t steps = 0;
    while (!r.is_zero()) {
        std::uint32_t dr = r.degree(x);
        if (dr < e) break;
        Poly lc = r.coeff_in(x, dr);
        r = I * r - lc * g.mul_term(Monomial::of(x, dr - e), 1);
        ++steps;
    }
    if (steps < d - e + 1) r = r * I.pow(d - e + 1 - steps);
    return r;
}

Poly prem_chain(const Poly& f, const std::vector<Poly>& T) {
    std::vector<Poly> sorted;
    for (const Poly& t : T)
        if (t.mvar() >= 0) sorted.push_back(t);
    std::sort(sorted.begin(), sorted.end(), [](const Poly& a, const Poly& b) { return a.mvar() < b.mvar(); });
    Poly r = f;
    for (const Poly& t : sorted) {
        if (r.is_zero()) break;
        r = prem(r, t);
    }
    return r;
}

Poly subst_eval(const Poly& f, std::uint32_t var, Coeff value) {
    Field F(f.ring().p);
    std::vector<Term> out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) {
        std::uint32_t e = t.mono.degree(var);
        if (e == 0)
            out.push_back(t);
        else
            out.push_back({t.mono.without(var), F.mul(t.coeff, F.pow(value, e))});
    }
    return Poly(f.ring(), std::move(out));
}

namespace {

std::uint32_t single_var(const Poly& f) {
    auto vs = f.vars();
    if (vs.size() != 1) throw std::invalid_argument("expected a univariate polynomial: " + f.str());
    return vs[0];
}

} // namespace

Poly uni_squarefree_part(const Poly& f) {
    const std::uint32_t v = single_var(f);
    if (f.degree(v) >= f.ring().p)
        throw InseparableDegree("degree " + std::to_string(f.degree(v)) + " is not below p = " + std::to_string(f.ring().p));
    Field F(f.ring().p);
    uni::UPoly a = uni::from_poly(f, v);
    uni::UPoly g = uni::gcd(F, a, uni::derivative(F, a));
    uni::UPoly q, r;
    uni::divrem(F, a, g, q, r);
    return uni::to_poly(uni::monic(F, q), f.ring(), v);
}

std::vector<Coeff> uni_rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    if (f.is_constant()) return {};
    const std::uint32_t v = single_var(f);
    return uni::roots(Field(f.ring().p), uni::from_poly(f, v));
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const Ring& R = a.ring();
    Field F(R.p);
    std::vector<Term> quot;
    std::vector<Term> cur = a.terms();
    const Coeff inv = F.inv(b.lead_coeff());
    while (!cur.empty()) {
        const Term lt = cur.front();
        if (!b.lead_monomial().divides(lt.mono)) return std::nullopt;
        Monomial m = lt.mono.quotient(b.lead_monomial());
        Coeff c = F.mul(lt.coeff, inv);
        quot.push_back({m, c});
        cur = merge_axpy(F, cur, b.mul_term(m, 1).terms(), F.neg(c));
    }
    return Poly(R, std::move(quot));
}

Poly content_in(const Poly& f, std::uint32_t var) {
    Poly g(f.ring());
    std::uint32_t d = f.degree(var);
    for (std::uint32_t k = 0; k <= d; ++k) {
        Poly c = f.coeff_in(var, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    const Ring& R = a.ring();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(R, 1);
    // Pure monomials have monomial gcds; catch them early.
    if (a.size() == 1 && b.size() == 1) return Poly::monomial(R, gcd(a.lead_monomial(), b.lead_monomial()));
    std::uint32_t v = std::min(a.lead_monomial().top_var(), b.lead_monomial().top_var());
    if (!a.has_var(v)) return poly_gcd(a, content_in(b, v));
    if (!b.has_var(v)) return poly_gcd(content_in(a, v), b);
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly c = poly_gcd(ca, cb);
    Poly pa = *exact_divide(a, ca);
    Poly pb = *exact_divide(b, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.has_var(v)) {
        Poly r = prem(pa, pb);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
            break;
        }
        pb = *exact_divide(r, content_in(r, v));
    }
    // pb nonzero and free of v means the primitive parts are coprime.
    Poly g = pb.is_zero() ? pa : Poly::constant(R, 1);
    if (!g.is_constant()) g = *exact_divide(g, content_in(g, v));
    return (c * g).monic();
}

std::optional<Poly> poly_sqrt(const Poly& f) {
    const Ring& R = f.ring();
    Field F(R.p);
    if (f.is_zero()) return f;
    const Term& lt = f.lead();
    std::vector<VarPow> half;
    for (const VarPow& vp : lt.mono.pairs()) {
        if (vp.exp % 2 != 0) return std::nullopt;
        half.push_back({vp.var, vp.exp / 2});
    }
    auto rts = uni::roots(F, uni::UPoly{F.neg(lt.coeff), 0, 1});
    if (rts.empty()) return std::nullopt;
    Poly s = Poly::monomial(R, Monomial::from_pairs(half), rts[0]);
    const Term lead_s = s.lead();
    const Coeff two_inv = F.inv(F.mul(2, lead_s.coeff));
    Poly rem = f - s * s;
    std::size_t guard = 0;
    while (!rem.is_zero()) {
        const Term& rt = rem.lead();
        if (!lead_s.mono.divides(rt.mono) || ++guard > 2 * f.size() + 8) return std::nullopt;
        Monomial m = rt.mono.quotient(lead_s.mono);
        // The next term must sit strictly below the leading term of s.
        if (!(m < lead_s.mono)) return std::nullopt;
        Poly t = Poly::monomial(R, m, F.mul(rt.coeff, two_inv));
        rem = rem - t * (s + s + t);
        s = s + t;
    }
    return s;
}

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& r, std::size_t line, std::size_t off)
        : s_(text), R_(r), F_(r.p), line_(line), off_(off) {}

    Poly parse() {
        std::vector<Term> terms;
        skip_ws();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Term t = term();
            if (neg) t.coeff = F_.neg(t.coeff);
            terms.push_back(std::move(t));
        }
        return Poly(R_, std::move(terms));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, off_ + pos_ + 1); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::uint64_t integer() {
        if (!at_digit()) fail("expected a number");
        std::uint64_t v = 0;
        while (at_digit()) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (1ULL << 40)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    Coeff coefficient() {
        Coeff c = 0;
        if (!at_digit()) fail("expected a number");
        while (at_digit()) {
            c = F_.add(F_.mul(c, 10), static_cast<Coeff>(peek() - '0'));
            ++pos_;
        }
        return c;
    }

    Term term() {
        Coeff c = 1;
        std::vector<VarPow> pairs;
        bool have_factor = false;
        if (at_digit()) {
            c = coefficient();
            have_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') fail("expected a variable after '*'");
            }
        }
        while (true) {
            skip_ws();
            if (peek() == 'x') {
                pairs.push_back(factor());
                have_factor = true;
                skip_ws();
                if (peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (peek() != 'x') fail("expected a variable after '*'");
                }
                continue;
            }
            break;
        }
        if (!have_factor) fail("expected a term");
        return {Monomial::from_pairs(std::move(pairs)), c};
    }

    VarPow factor() {
        ++pos_; // 'x'
        if (!at_digit()) fail("expected a variable index");
        std::uint64_t idx = integer();
        if (idx >= R_.n) fail("variable x" + std::to_string(idx) + " outside the ring of " + std::to_string(R_.n) + " variables");
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            e = integer();
            if (e > 1000000) fail("exponent too large");
        }
        return {static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(e)};
    }

    std::string_view s_;
    const Ring& R_;
    Field F_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t off_;
};

} // namespace

Poly parse_poly(std::string_view text, const Ring& r, std::size_t line, std::size_t column_offset) {
    return PolyParser(text, r, line, column_offset).parse();
}

long max_var_index(std::string_view text) {
    long best = -1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t j = i + 1;
        long v = 0;
        bool any = false;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            v = v * 10 + (text[j] - '0');
            if (v > 1000000) break;
            any = true;
            ++j;
        }
        if (any) best = std::max(best, v);
    }
    return best;
}

} // namespace chordnet
