#pragma once

#include <chordnet/ring.hpp>

#include <vector>

namespace chordnet::uni {

// Dense univariate polynomial over GF(p), coefficients from degree 0 up.
// The zero polynomial is the empty vector.
using UPoly = std::vector<Coeff>;

void trim(UPoly& a);
int deg(const UPoly& a);
UPoly add(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
// Quotient and remainder; b must be nonzero.
void divrem(const Field& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly rem(const Field& F, const UPoly& a, const UPoly& b);
UPoly monic(const Field& F, const UPoly& a);
UPoly gcd(const Field& F, UPoly a, UPoly b);
UPoly derivative(const Field& F, const UPoly& a);
// base^e mod m.
UPoly powmod(const Field& F, const UPoly& base, std::uint64_t e, const UPoly& m);
// Roots in GF(p), sorted ascending, without multiplicity.
std::vector<Coeff> roots(const Field& F, const UPoly& f);
// Rabin's test; f must have degree >= 1.
bool is_irreducible(const Field& F, const UPoly& f);

// Conversions for polynomials involving at most the single variable var.
UPoly from_poly(const Poly& f, std::uint32_t var);
Poly to_poly(const UPoly& a, const Ring& r, std::uint32_t var);

} // namespace chordnet::uni
