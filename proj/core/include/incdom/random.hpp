#pragma once

// Seeded generators for reproducible test corpora. Only raw mt19937_64
// output is used, so results do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "incdom/dompair.hpp"
#include "incdom/graph.hpp"

namespace incdom {

/// Uniform double in [0,1) from the top 53 bits.
inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [lo, hi].
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Uniformly random permutation of 1..n.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Random dominating set of G_{l,k}: each vertex kept with probability p,
/// then undominated vertices are added in colex order.
DomPair random_dominating(int n, int l, int k, double p, std::mt19937_64& rng);

/// Random vertex subset of G_{l,k} (not necessarily dominating).
DomPair random_dompair(int n, int l, int k, double p, std::mt19937_64& rng);

}  // namespace incdom
