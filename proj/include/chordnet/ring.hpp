#pragma once

#include <chordnet/errors.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chordnet {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t m);

// Arithmetic in GF(p). Values are kept reduced in [0, p).
class Field {
public:
    explicit Field(Coeff p = 65521) noexcept : p_(p) {}

    Coeff p() const noexcept { return p_; }
    Coeff add(Coeff a, Coeff b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Coeff>(s >= p_ ? s - p_ : s);
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
    }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;
    Coeff inv(Coeff a) const;
    Coeff from_int(long long v) const noexcept;

private:
    Coeff p_;
};

// Polynomial ring GF(p)[x0, ..., x(n-1)] with lex order x0 > x1 > ... .
struct Ring {
    std::size_t n = 0;
    Coeff p = 65521;

    Field field() const { return Field(p); }
    bool operator==(const Ring&) const = default;
};

struct VarPow {
    std::uint32_t var;
    std::uint32_t exp;
    bool operator==(const VarPow&) const = default;
};

// Validating constructor: throws NonPrimeModulus unless p is an odd prime.
Ring make_ring(std::size_t n, std::uint64_t p);

// Sparse exponent vector: (variable, exponent) pairs sorted by variable
// index, exponents strictly positive.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(std::uint32_t var, std::uint32_t exp = 1);
    static Monomial from_pairs(std::vector<VarPow> pairs);

    const std::vector<VarPow>& pairs() const noexcept { return f_; }
    bool is_one() const noexcept { return f_.empty(); }
    std::uint32_t degree(std::uint32_t var) const noexcept;
    std::uint64_t total_degree() const noexcept;
    // Largest variable present, i.e. the smallest index. Undefined for 1.
    std::uint32_t top_var() const noexcept { return f_.front().var; }

    bool divides(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const;
    // Requires divides(other) from the divisor's side: returns this / d.
    Monomial quotient(const Monomial& d) const;
    Monomial without(std::uint32_t var) const;
    Monomial with_degree(std::uint32_t var, std::uint32_t exp) const;
    bool coprime(const Monomial& other) const noexcept;

    bool operator==(const Monomial&) const = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

private:
    std::vector<VarPow> f_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Coeff coeff;
    bool operator==(const Term&) const = default;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(const Ring& r) : ring_(r) {}
    // Sorts, combines like terms and drops zero coefficients.
    Poly(const Ring& r, std::vector<Term> terms);

    static Poly constant(const Ring& r, Coeff c);
    static Poly variable(const Ring& r, std::uint32_t var, std::uint32_t exp = 1);
    static Poly monomial(const Ring& r, Monomial m, Coeff c = 1);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    Coeff constant_value() const noexcept;
    const Term& lead() const { return terms_.front(); }
    const Monomial& lead_monomial() const { return terms_.front().mono; }
    Coeff lead_coeff() const { return terms_.front().coeff; }

    // Main variable index, or -1 for constants.
    int mvar() const noexcept;
    std::uint32_t mdeg() const;
    Poly init() const;
    std::uint32_t degree(std::uint32_t var) const noexcept;
    // Coefficient of var^d, viewing the polynomial univariately in var.
    Poly coeff_in(std::uint32_t var, std::uint32_t d) const;
    bool has_var(std::uint32_t var) const noexcept;
    std::vector<std::uint32_t> vars() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scale(Coeff c) const;
    Poly mul_term(const Monomial& m, Coeff c) const;
    Poly pow(std::uint32_t e) const;
    // Scales so that the lex-leading coefficient is 1.
    Poly monic() const;

    Coeff evaluate(const std::vector<Coeff>& point) const;
    // Applies old-index -> new-index mapping to every variable.
    Poly relabel(const std::vector<std::uint32_t>& to, const Ring& target) const;
    Poly with_ring(const Ring& target) const;

    std::string str() const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    // Total order used for canonical sorting of polynomial sets.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

private:
    Ring ring_{};
    std::vector<Term> terms_; // strictly decreasing lex order
};

// A pair (F, H) whose zero set is {x : f(x) = 0 for f in F, h(x) != 0 for h in H}.
struct PolySystem {
    std::vector<Poly> eqs;
    std::vector<Poly> ineqs;

    // Sorts, deduplicates and makes every member monic. Zero equations are
    // dropped.
    void canonicalize();
    bool operator==(const PolySystem&) const = default;
};

struct MainInfo {
    std::uint32_t rank;
    Poly initial;
    std::uint32_t mdeg;
};

MainInfo mvar_init_mdeg(const Poly& f);

Poly normal_form(const Poly& f, const std::vector<Poly>& G);
Poly prem(const Poly& f, const Poly& g);
// Reduces by the members of T in decreasing order of main variable.
Poly prem_chain(const Poly& f, const std::vector<Poly>& T);

struct GroebnerOptions {
    std::size_t pair_budget = 200000;
};
std::vector<Poly> buchberger_lex(const std::vector<Poly>& F, const GroebnerOptions& opt = {});

Poly subst_eval(const Poly& f, std::uint32_t var, Coeff value);

Poly uni_squarefree_part(const Poly& f);
std::vector<Coeff> uni_rational_roots(const Poly& f);

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);
// Monic greatest common divisor of two multivariate polynomials.
Poly poly_gcd(const Poly& a, const Poly& b);
// Gcd of the coefficients of f viewed univariately in var.
Poly content_in(const Poly& f, std::uint32_t var);
// Square root of f when f is a perfect square, else nullopt.
std::optional<Poly> poly_sqrt(const Poly& f);

Poly parse_poly(std::string_view text, const Ring& r, std::size_t line = 1,
                std::size_t column_offset = 0);
// Largest variable index mentioned in the text, or -1.
long max_var_index(std::string_view text);

} // namespace chordnet
