#pragma once

#include <chordnet/ring.hpp>

#include <vector>

namespace chordnet {

// Polynomials with pairwise distinct main variables, sorted by main variable
// index (largest variable first).
using TriangularSet = std::vector<Poly>;

struct RegularSystem {
    TriangularSet T;
    std::vector<Poly> U;
    bool operator==(const RegularSystem&) const = default;
};

struct DecompOptions {
    bool squarefree = false;
    GroebnerOptions groebner{};
};

std::vector<TriangularSet> tri_zero_dim(const std::vector<Poly>& F, const DecompOptions& opt = {});
std::vector<TriangularSet> tri_monomial(const std::vector<Poly>& F);
std::vector<RegularSystem> tri_binomial(const PolySystem& sys, const DecompOptions& opt = {});

std::vector<Poly> sat_generators(const TriangularSet& T, const GroebnerOptions& opt = {});

enum class Primality { Prime, NotPrime, Unknown };
Primality is_prime_form(const TriangularSet& T);
const char* to_string(Primality p);

// Product of main degrees, i.e. the number of points of a squarefree
// zero-dimensional triangular set counted over the algebraic closure.
std::uint64_t degree_of(const TriangularSet& T);

} // namespace chordnet
