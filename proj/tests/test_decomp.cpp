#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace chordnet;
using namespace testing_support;

namespace {

std::vector<std::string> strs(const std::vector<TriangularSet>& v) {
    std::vector<std::string> out;
    for (const auto& T : v) {
        std::string s;
        for (const Poly& t : T) s += (s.empty() ? "" : ", ") + t.str();
        out.push_back("(" + s + ")");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> with_field_equations(std::vector<Poly> F, const Ring& R) {
    for (std::uint32_t i = 0; i < R.n; ++i) F.push_back(Poly::variable(R, i, R.p) - Poly::variable(R, i));
    return F;
}

} // namespace

TEST_CASE("zero-dimensional decomposition examples") {
    const Ring R = make_ring(4, 7);
    CHECK(strs(tri_zero_dim(Ps(R, {"x0^3 - x0", "x0*x2 - x2", "x2^2 - x2"}))) ==
          std::vector<std::string>{"(x0 - 1, x2 - 1)", "(x0^3 - x0, x2)"});
    CHECK(strs(tri_zero_dim(Ps(R, {"x0 - 5"}))) == std::vector<std::string>{"(x0 + 2)"});

    // The initial x3^2 of the second input is a zero divisor modulo
    // x3^2 - x3, so the tower splits whether or not squarefree is asked for.
    const auto F = Ps(R, {"x2^2 - x2", "x2*x3^2 - x3", "x2 - 1"});
    const std::vector<std::string> split = {"(x2 - 1, x3 - 1)", "(x2 - 1, x3)"};
    CHECK(strs(tri_zero_dim(F)) == split);
    DecompOptions sqf;
    sqf.squarefree = true;
    CHECK(strs(tri_zero_dim(F, sqf)) == split);
    CHECK(strs(tri_zero_dim(Ps(R, {"x3^2 - x3"}))) == std::vector<std::string>{"(x3^2 - x3)"});

    CHECK(tri_zero_dim(Ps(R, {"x0", "x0 - 1"})).empty());
    CHECK_THROWS_AS(tri_zero_dim(Ps(R, {"x0*x1 - 1"})), NotZeroDimensional);
}

TEST_CASE("every output is monic and triangular") {
    const Ring R = make_ring(3, 13);
    DecompOptions sqf;
    sqf.squarefree = true;
    for (const auto& T : tri_zero_dim(Ps(R, {"x0^2 - x1", "x1^2 - x2", "x2^3 - x2"}), sqf)) {
        std::set<int> seen;
        for (const Poly& t : T) {
            CHECK(t.init().is_constant());
            CHECK(t.init() == P(R, "1"));
            CHECK(seen.insert(t.mvar()).second);
        }
    }
}

TEST_CASE("monomial decomposition") {
    const Ring R = make_ring(6, 65521);
    CHECK(strs(tri_monomial(Ps(R, {"x0*x1"}))) == std::vector<std::string>{"(x0)", "(x1)"});
    CHECK(strs(tri_monomial(Ps(R, {"x0*x1", "x1*x2"}))) == std::vector<std::string>{"(x0, x2)", "(x1)"});
    const auto primes = tri_monomial(parse_problem(fixture("example51.sys")).polys);
    std::size_t four = 0;
    for (const auto& T : primes) four += T.size() == 4;
    CHECK(four == 6);
}

TEST_CASE("binomial decomposition examples") {
    const Ring R = make_ring(8, 65521);
    auto out = tri_binomial({{P(R, "x0")}, {}});
    REQUIRE(out.size() == 1);
    CHECK(out[0].T == std::vector<Poly>{P(R, "x0")});

    out = tri_binomial({{P(R, "x0*x1 - 1")}, {}});
    REQUIRE(out.size() == 1);
    CHECK(out[0].T == std::vector<Poly>{P(R, "x0*x1 - 1")});
    CHECK(out[0].U == std::vector<Poly>{P(R, "x1")});

    // One branch for x3 != 0 and the disjoint cases x3 = 0.
    out = tri_binomial({{P(R, "x0*x3 - x1*x2")}, {}});
    CHECK(out.size() == 3);
    CHECK(out[0].T == std::vector<Poly>{P(R, "x0*x3 - x1*x2")});
    CHECK(out[0].U == std::vector<Poly>{P(R, "x3")});

    CHECK_THROWS_AS(tri_binomial({{P(R, "x0 + x1 + x2")}, {}}), NotBinomial);
    CHECK_THROWS_AS(tri_binomial({{P(R, "x0 - x1")}, {P(R, "x0 + 1")}}), NotBinomial);
}

TEST_CASE("saturation generators") {
    const Ring R = make_ring(8, 65521);
    const auto minors = parse_problem(fixture("minors2x4.sys")).polys;
    const TriangularSet T = Ps(R, {"x0*x3 - x1*x2", "x2*x5 - x3*x4", "x4*x7 - x5*x6"});
    const auto G = sat_generators(T);
    for (const Poly& f : minors) CHECK(normal_form(f, G).is_zero());
    CHECK(std::find(G.begin(), G.end(), P(R, "x0*x5 - x1*x4")) != G.end());

    const TriangularSet L = Ps(R, {"x1", "x3", "x4", "x5"});
    CHECK(sat_generators(L) == L);

    const TriangularSet M = Ps(R, {"x0 - x1", "x1^2 - x2"});
    for (const Poly& t : M) CHECK(normal_form(t, sat_generators(M)).is_zero());
}

TEST_CASE("prime form detection") {
    const Ring R = make_ring(8, 65521);
    CHECK(is_prime_form(Ps(R, {"x0*x3 - x1*x2"})) == Primality::Prime);
    CHECK(is_prime_form(Ps(R, {"x2", "x3"})) == Primality::Prime);
    CHECK(is_prime_form(Ps(R, {"x0^2 - x1", "x1^2 - x2"})) == Primality::Unknown);
    CHECK(is_prime_form(Ps(R, {"x0 - x1", "x1^2 - 1"})) == Primality::NotPrime);
    // 17 is the smallest non-residue modulo 65521.
    CHECK(is_prime_form(Ps(R, {"x0 - x1", "x1^2 - 17"})) == Primality::Prime);
    CHECK(is_prime_form(Ps(R, {"x0 - x1", "x1^2 - 3"})) == Primality::NotPrime);
    CHECK(is_prime_form(Ps(R, {"x0^2 - x1^2"})) == Primality::NotPrime);
}

TEST_CASE("property: zero-dimensional outputs are disjoint and cover V(F)") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 60; ++it) {
        const Coeff p = it % 2 ? 3 : 5;
        const std::size_t n = 2 + it % 2;
        const Ring R = make_ring(n, p);
        std::vector<Poly> F;
        for (int k = 0; k < 2; ++k) F.push_back(random_poly(R, rng, all_vars(R), 2 + rng() % 2, 2));
        F = with_field_equations(F, R);
        DecompOptions opt;
        opt.squarefree = true;
        const auto Ts = tri_zero_dim(F, opt);
        std::map<std::vector<Coeff>, int> hits;
        std::uint64_t degsum = 0;
        for (const auto& T : Ts) {
            degsum += degree_of(T);
            for (const auto& x : brute_points(R, {T, {}})) ++hits[x];
        }
        const auto truth = brute_points(R, {F, {}});
        CHECK(hits.size() == truth.size());
        for (const auto& x : truth) CHECK(hits[x] == 1);
        CHECK(degsum == truth.size());
    }
}

TEST_CASE("property: monomial decomposition equals minimal vertex covers") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 3 + rng() % 10;
        const Ring R = make_ring(n, 65521);
        std::vector<Poly> F;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> E;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b)
                if (rng() % 4 == 0) {
                    E.push_back({a, b});
                    F.push_back(Poly::variable(R, a) * Poly::variable(R, b));
                }
        if (F.empty()) continue;
        std::set<std::uint32_t> covers_found;
        for (const auto& T : tri_monomial(F)) {
            std::uint32_t mask = 0;
            for (const Poly& t : T) mask |= 1u << t.mvar();
            covers_found.insert(mask);
        }
        std::vector<std::uint32_t> covers;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            bool ok = true;
            for (auto [a, b] : E) ok = ok && (((m >> a) & 1) || ((m >> b) & 1));
            if (ok) covers.push_back(m);
        }
        std::set<std::uint32_t> minimal;
        for (std::uint32_t m : covers) {
            bool min = true;
            for (std::uint32_t o : covers)
                if (o != m && (o & m) == o) min = false;
            if (min) minimal.insert(m);
        }
        CHECK(covers_found == minimal);
    }
}

TEST_CASE("property: binomial outputs are sound, disjoint and complete") {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 60; ++it) {
        const Ring R = make_ring(3, 5);
        std::vector<Poly> F;
        for (int k = 0; k < 2; ++k) {
            Poly b = random_poly(R, rng, all_vars(R), 1, 2) - random_poly(R, rng, all_vars(R), 1, 2);
            if (b.size() <= 2) F.push_back(b);
        }
        const auto out = tri_binomial({F, {}});
        std::map<std::vector<Coeff>, int> hits;
        for (const auto& rs : out) {
            // Condition (i): a rank carries an equation or an inequation, not both.
            std::set<int> eq_ranks, in_ranks;
            for (const Poly& t : rs.T) eq_ranks.insert(t.mvar());
            for (const Poly& u : rs.U) in_ranks.insert(u.mvar());
            for (int r : eq_ranks) CHECK_FALSE(in_ranks.count(r));
            for (const auto& x : brute_points(R, {rs.T, rs.U})) ++hits[x];
        }
        const auto truth = brute_points(R, {F, {}});
        for (const auto& [x, c] : hits) CHECK(satisfies({F, {}}, x));
        for (const auto& x : truth) CHECK(hits[x] == 1);
    }
}
