#include "support.hpp"

#include <doctest.h>

using namespace chordnet;
using namespace testing_support;

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(make_ring(3, 15), NonPrimeModulus);
    CHECK_THROWS_AS(make_ring(3, 2), NonPrimeModulus);
    CHECK(make_ring(3, 65521).p == 65521);
}

TEST_CASE("field arithmetic") {
    Field F(13);
    CHECK(F.mul(F.inv(5), 5) == 1);
    CHECK(F.pow(2, 12) == 1);
    CHECK(F.from_int(-1) == 12);
    CHECK_THROWS(F.inv(0));
}

TEST_CASE("printing and parsing") {
    const Ring R = make_ring(4, 65521);
    const Poly f = P(R, "3*x0^2*x3 - x1*x2 + 5");
    CHECK(f.str() == "3*x0^2*x3 - x1*x2 + 5");
    CHECK(P(R, f.str()) == f);
    CHECK(P(R, "x1 x2 + 2x0").str() == "2*x0 + x1*x2");
    CHECK(P(R, "0").is_zero());
    CHECK(P(R, "x0 - x0").is_zero());
    CHECK(P(R, "-x3").str() == "-x3");

    SUBCASE("error column points at the offending character") {
        try {
            (void)P(R, "x0^^2");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 4);
        }
    }
    CHECK_THROWS_AS((void)P(R, "x9"), ParseError);
    CHECK_THROWS_AS((void)P(R, "x0 +"), ParseError);
}

TEST_CASE("main variable, initial and main degree") {
    const Ring R = make_ring(9, 13);
    auto m = mvar_init_mdeg(P(R, "x1 - x2"));
    CHECK(m.rank == 1);
    CHECK(m.initial == P(R, "1"));
    CHECK(m.mdeg == 1);

    m = mvar_init_mdeg(P(R, "x2*x3^2 - x3"));
    CHECK(m.rank == 2);
    CHECK(m.initial == P(R, "x3^2"));
    CHECK(m.mdeg == 1);

    m = mvar_init_mdeg(P(R, "x0^2 + x0*x8 + x8^2"));
    CHECK(m.rank == 0);
    CHECK(m.initial == P(R, "1"));
    CHECK(m.mdeg == 2);

    CHECK_THROWS_AS(mvar_init_mdeg(P(R, "7")), ConstantPolynomial);
}

TEST_CASE("normal form examples") {
    const Ring R = make_ring(3, 65521);
    CHECK(normal_form(P(R, "x0^2"), {P(R, "x0 - 1")}) == P(R, "1"));
    CHECK(normal_form(P(R, "x1*x2"), Ps(R, {"x1 - x2", "x2^2 - x2"})) == P(R, "x2"));
    CHECK(normal_form(P(R, "x0*x1 + x2^5"), {P(R, "1")}).is_zero());
}

TEST_CASE("pseudo-remainder examples") {
    const Ring R = make_ring(4, 65521);
    CHECK(prem(P(R, "x1^3"), P(R, "x0^2")) == P(R, "x1^3"));
    CHECK(prem(P(R, "x0^2"), P(R, "x0*x1 - 1")) == P(R, "1"));
    const Poly t = P(R, "x0*x3 - x1*x2");
    CHECK(prem(t, t).is_zero());

    CHECK(prem_chain(t, {t}).is_zero());
    CHECK(prem_chain(P(R, "1"), Ps(R, {"x0*x1 - 1", "x2"})) == P(R, "1"));
    CHECK(prem_chain(P(R, "x0*x2"), Ps(R, {"x0*x1 - 1", "x2"})).is_zero());
}

TEST_CASE("lex Groebner bases") {
    const Ring R = make_ring(4, 65521);
    auto G = buchberger_lex(Ps(R, {"x0 - 1", "x0 + 1"}));
    REQUIRE(G.size() == 1);
    CHECK(G[0] == P(R, "1"));

    G = buchberger_lex(Ps(R, {"x0*x2 - x2", "x2^2 - x2"}));
    CHECK(normal_form(P(R, "x0*x2^2 - x2^2"), G).is_zero());

    G = buchberger_lex(Ps(R, {"x2^2 - x2", "x2*x3^2 - x3"}));
    CHECK(std::find(G.begin(), G.end(), P(R, "x2^2 - x2")) != G.end());

    // Sorted by decreasing leading monomial and reduced.
    for (std::size_t i = 1; i < G.size(); ++i) CHECK(G[i - 1].lead_monomial() > G[i].lead_monomial());

    GroebnerOptions tiny;
    tiny.pair_budget = 1;
    CHECK_THROWS_AS(buchberger_lex(Ps(R, {"x0^2 - x1", "x0*x1 - x2", "x1^2 - x3", "x0*x3 - 1"}), tiny),
                    BudgetExceeded);
}

TEST_CASE("substitution") {
    const Ring R = make_ring(10, 13);
    CHECK(subst_eval(P(R, "x9^4 - 1"), 9, 1).is_zero());
    CHECK(subst_eval(P(R, "x0 + x1 + x8"), 8, 2) == P(R, "x0 + x1 + 2"));
    const Poly h = P(R, "x0*x1"), f = P(R, "x0^2 - 1");
    CHECK(subst_eval(normal_form(h, {f}), 1, 3) == normal_form(subst_eval(h, 1, 3), {f}));
}

TEST_CASE("univariate squarefree part") {
    const Ring R = make_ring(10, 13);
    CHECK(uni_squarefree_part(P(R, "x3^2")) == P(R, "x3"));
    CHECK(uni_squarefree_part(P(R, "x9^4 - 1")) == P(R, "x9^4 - 1"));
    CHECK(uni_squarefree_part(P(R, "x0^3 - x0")) == P(R, "x0^3 - x0"));
    CHECK_THROWS_AS(uni_squarefree_part(P(R, "x0^13 - x0")), InseparableDegree);
}

TEST_CASE("univariate roots") {
    const Ring R = make_ring(1, 7);
    CHECK(uni_rational_roots(P(R, "x0^2 - 1")) == std::vector<Coeff>{1, 6});
    CHECK(uni_rational_roots(P(R, "x0^3 - 1")) == std::vector<Coeff>{1, 2, 4});
    CHECK(uni_rational_roots(P(R, "x0^2 + 1")).empty());
    CHECK(uni_rational_roots(P(R, "x0^7 - x0")).size() == 7);
    CHECK(uni_rational_roots(P(R, "x0^3")) == std::vector<Coeff>{0});
}

TEST_CASE("gcd, exact division and square roots") {
    const Ring R = make_ring(3, 65521);
    const Poly a = P(R, "x0*x1 - x2"), b = P(R, "x0 + x2^2");
    CHECK(poly_gcd(a * b, b * b) == b.monic());
    CHECK(exact_divide(a * b, b).value() == a);
    CHECK_FALSE(exact_divide(a, b).has_value());
    CHECK(poly_sqrt(a * a).value() * poly_sqrt(a * a).value() == a * a);
    CHECK_FALSE(poly_sqrt(a * b).has_value());
    CHECK(content_in(P(R, "x1*x0^2 + x1^2*x0"), 0) == P(R, "x1"));
}

TEST_CASE("property: division contract") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 150; ++it) {
        const Coeff p = it % 2 ? 5 : 7;
        const Ring R = make_ring(3, p);
        std::vector<Poly> G;
        for (int k = 0; k < 2; ++k) {
            Poly g = random_poly(R, rng, all_vars(R), 3, 2);
            if (!g.is_zero()) G.push_back(g);
        }
        if (G.empty()) continue;
        const Poly f = random_poly(R, rng, all_vars(R), 4, 3);
        const Poly r = normal_form(f, G);
        // r is reduced with respect to G.
        for (const Term& t : r.terms())
            for (const Poly& g : G)
                if (!g.is_zero()) CHECK_FALSE(g.lead_monomial().divides(t.mono));
        // f - r lies in the ideal.
        CHECK(normal_form(f - r, buchberger_lex(G)).is_zero());
    }
}

TEST_CASE("property: pseudo-division contract") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 150; ++it) {
        const Ring R = make_ring(4, 7);
        const Poly f = random_poly(R, rng, all_vars(R), 4, 3);
        const Poly g = random_poly(R, rng, all_vars(R), 3, 2);
        if (g.is_constant()) continue;
        const std::uint32_t x = static_cast<std::uint32_t>(g.mvar());
        const Poly r = prem(f, g);
        CHECK(r.degree(x) < g.degree(x));
        if (f.degree(x) < g.degree(x)) {
            CHECK(r == f);
            continue;
        }
        const std::uint32_t k = f.degree(x) - g.degree(x) + 1;
        const Poly diff = g.init().pow(k) * f - r;
        CHECK(exact_divide(diff, g).has_value());
    }
}

TEST_CASE("property: substitution commutes with reduction by a monic polynomial") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint32_t> pick(0, 3);
    for (int it = 0; it < 500; ++it) {
        const Ring R = make_ring(4, 13);
        const std::uint32_t l = pick(rng);
        std::vector<std::uint32_t> others;
        for (std::uint32_t v = 0; v < 4; ++v)
            if (v != l) others.push_back(v);
        Poly f = random_poly(R, rng, others, 3, 2);
        if (f.is_constant()) continue;
        // Make f monic in its main variable.
        const std::uint32_t k = static_cast<std::uint32_t>(f.mvar());
        f = f - f.init() * Poly::variable(R, k, f.mdeg()) + Poly::variable(R, k, f.mdeg());
        if (f.is_constant() || f.mvar() != static_cast<int>(k) || !f.init().is_constant()) continue;
        const Poly h = random_poly(R, rng, all_vars(R), 5, 3);
        const Coeff v = static_cast<Coeff>(rng() % 13);
        CHECK(subst_eval(normal_form(h, {f}), l, v) == normal_form(subst_eval(h, l, v), {f}));
    }
}

TEST_CASE("property: squarefree part") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 100; ++it) {
        const Ring R = make_ring(1, 11);
        Poly f = random_poly(R, rng, {0}, 3, 3);
        f = f * f * random_poly(R, rng, {0}, 2, 2);
        if (f.is_constant() || f.degree(0) >= 11) continue;
        f = f.monic();
        const Poly s = uni_squarefree_part(f);
        Poly ds(R);
        for (const Term& t : s.terms())
            if (t.mono.degree(0) > 0)
                ds += Poly::monomial(R, t.mono.with_degree(0, t.mono.degree(0) - 1), Field(11).mul(t.coeff, t.mono.degree(0)));
        if (s.degree(0) > 0) CHECK(poly_gcd(s, ds) == P(R, "1"));
        CHECK(uni_rational_roots(s) == uni_rational_roots(f));
    }
}
