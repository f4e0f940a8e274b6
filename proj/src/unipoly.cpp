#include <chordnet/unipoly.hpp>

#include <algorithm>
#include <random>

namespace chordnet::uni {

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

void divrem(const Field& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    r = a;
    trim(r);
    q.clear();
    const int db = deg(b);
    if (deg(r) < db) return;
    const Coeff lead_inv = F.inv(b.back());
    q.assign(static_cast<std::size_t>(deg(r) - db + 1), 0);
    for (int k = deg(r); k >= db; --k) {
        Coeff c = F.mul(r[static_cast<std::size_t>(k)], lead_inv);
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k - db + j);
            r[idx] = F.sub(r[idx], F.mul(c, b[static_cast<std::size_t>(j)]));
        }
    }
    trim(r);
    trim(q);
}

UPoly rem(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divrem(F, a, b, q, r);
    return r;
}

UPoly monic(const Field& F, const UPoly& a) {
    if (a.empty()) return a;
    Coeff inv = F.inv(a.back());
    UPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
    return r;
}

UPoly gcd(const Field& F, UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

UPoly derivative(const Field& F, const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], F.from_int(static_cast<long long>(i)));
    trim(r);
    return r;
}

UPoly powmod(const Field& F, const UPoly& base, std::uint64_t e, const UPoly& m) {
    UPoly result{1};
    result = rem(F, result, m);
    UPoly b = rem(F, base, m);
    while (e > 0) {
        if (e & 1U) result = rem(F, mul(F, result, b), m);
        e >>= 1U;
        if (e > 0) b = rem(F, mul(F, b, b), m);
    }
    return result;
}

namespace {

// Splits a product of distinct linear factors into its roots.
void split_linear(const Field& F, const UPoly& g, std::mt19937_64& rng, std::vector<Coeff>& out) {
    const int d = deg(g);
    if (d <= 0) return;
    if (d == 1) {
        UPoly m = monic(F, g);
        out.push_back(F.neg(m[0]));
        return;
    }
    const Coeff p = F.p();
    std::uniform_int_distribution<Coeff> dist(0, p - 1);
    for (;;) {
        UPoly probe{dist(rng), 1};
        UPoly h = powmod(F, probe, (p - 1) / 2, g);
        h = sub(F, h, UPoly{1});
        UPoly f1 = gcd(F, g, h);
        if (deg(f1) > 0 && deg(f1) < d) {
            UPoly q, r;
            divrem(F, g, f1, q, r);
            split_linear(F, f1, rng, out);
            split_linear(F, q, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<Coeff> roots(const Field& F, const UPoly& f0) {
    UPoly f = f0;
    trim(f);
    std::vector<Coeff> out;
    if (deg(f) <= 0) return out;
    const Coeff p = F.p();
    // Product of (x - a) over the roots a in GF(p).
    UPoly xp = powmod(F, UPoly{0, 1}, p, f);
    UPoly g = gcd(F, f, sub(F, xp, UPoly{0, 1}));
    if (p == 2) {
        for (Coeff a = 0; a < 2; ++a)
            if (rem(F, g, UPoly{F.neg(a), 1}).empty()) out.push_back(a);
        return out;
    }
    // Pull out the root zero first, since the splitting probe misses it.
    if (!g.empty() && g[0] == 0 && deg(g) >= 1) {
        out.push_back(0);
        g.erase(g.begin());
    }
    std::mt19937_64 rng(0x5eedULL + p);
    split_linear(F, g, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_irreducible(const Field& F, const UPoly& f0) {
    UPoly f = monic(F, f0);
    const int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    const UPoly x{0, 1};
    auto frob_iter = [&](int k) {
        UPoly r = x;
        for (int i = 0; i < k; ++i) r = powmod(F, r, F.p(), f);
        return r;
    };
    if (sub(F, frob_iter(d), rem(F, x, f)).size() != 0) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool prime = true;
        for (int s = 2; s * s <= q; ++s)
            if (q % s == 0) prime = false;
        if (!prime) continue;
        UPoly g = gcd(F, f, sub(F, frob_iter(d / q), x));
        if (deg(g) != 0) return false;
    }
    return true;
}

UPoly from_poly(const Poly& f, std::uint32_t var) {
    UPoly r;
    for (const Term& t : f.terms()) {
        std::uint32_t e = t.mono.degree(var);
        if (r.size() <= e) r.resize(e + 1, 0);
        r[e] = t.coeff;
    }
    trim(r);
    return r;
}

Poly to_poly(const UPoly& a, const Ring& r, std::uint32_t var) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        terms.push_back({i == 0 ? Monomial{} : Monomial::of(var, static_cast<std::uint32_t>(i)), a[i]});
    }
    return Poly(r, std::move(terms));
}

} // namespace chordnet::uni
