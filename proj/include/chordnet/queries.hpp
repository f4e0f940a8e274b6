#pragma once

#include <chordnet/network.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace chordnet {

// The subnetwork made of the ranks l and above. Its variety is the projection
// of V(net) onto x_l, ..., x_{n-1}.
ChordalNetwork eliminate_below(const ChordalNetwork& net, std::uint32_t l);

// Per-node number of points of the subnetwork hanging below each node.
std::map<std::uint32_t, BigInt> zero_weights(const ChordalNetwork& net);
// Number of points of V(net) over the algebraic closure. Exact when the
// network was built in squarefree mode, an upper bound otherwise.
BigInt zero_count(const ChordalNetwork& net);

// A point of V(net) with GF(p) coordinates, uniformly distributed when every
// specialization splits. Coordinates are indexed by the network variables.
std::vector<Coeff> sample(const ChordalNetwork& net, std::mt19937_64& rng);

struct MemberOptions {
    unsigned trials = 20;
};
// Monte Carlo test of whether h vanishes on V(net). A false answer is always
// correct; a true answer is wrong with probability at most 2^-trials.
bool radical_member(const ChordalNetwork& net, const Poly& h, std::mt19937_64& rng, const MemberOptions& opt = {});

// Shortest chain length below each node, counted in equations.
std::map<std::uint32_t, std::uint32_t> shortest_weights(const ChordalNetwork& net);
// -1 for a network without chains.
long dimension(const ChordalNetwork& net);
ChordalNetwork top_component(const ChordalNetwork& net);

// Chain counts keyed by dimension.
std::map<long, BigInt> dim_census(const ChordalNetwork& net);
// Visits the chains of dimension d; the visitor returns false to stop.
void isolate_dim(const ChordalNetwork& net, long d, const std::function<bool(const Chain&)>& visit);
std::vector<Chain> chains_of_dim(const ChordalNetwork& net, long d, std::size_t limit = SIZE_MAX);

struct PrimeComponent {
    long dim;
    TriangularSet chain;
    std::vector<Poly> generators;
};
struct PrimeOptions {
    std::size_t max_count = SIZE_MAX;
    std::optional<long> min_dim;
    GroebnerOptions groebner{};
};
// Minimal primes of the radical of the ideal, by decreasing dimension.
std::vector<PrimeComponent> minimal_primes(const ChordalNetwork& net, const PrimeOptions& opt = {});

} // namespace chordnet
