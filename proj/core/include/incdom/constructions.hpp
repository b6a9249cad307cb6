#pragma once

// Explicit objects: the graphs K+_{s,n-s}, H5a, H5b, H9; dominating sets
// built from them; Steiner triple systems and packings; and the layered
// well-covered hypergraphs giving small independent dominating sets of
// G_{k+1,k}.

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "incdom/dompair.hpp"
#include "incdom/graph.hpp"
#include "incdom/hypergraph.hpp"

namespace incdom {

/// K+_{s,n-s}: matching {2i-1,2i} (i <= s/2) inside [s], complete to
/// [s+1,n], [s+1,n] independent. Requires 1 < s < n <= 64.
Graph k_plus(int s, int n);

enum class SmallGraph { H5a, H5b, H9 };

Graph small_graph(SmallGraph which);
/// Parses "H5a" / "h5a" etc. Throws std::invalid_argument.
SmallGraph parse_small_graph(std::string_view name);

/// Minimum dominating set of G_{3,2} whose graph is K+_{(n+1)/2,(n-1)/2},
/// n = 1 mod 4, n >= 9. Dominating, not independent.
DomPair star_completed_dompair(int n);

/// Steiner triple system on [v] (Bose for v = 3 mod 6, Skolem for
/// v = 1 mod 6). Throws std::domain_error for inadmissible v.
SetFamily steiner_triple_system(int v);

/// True when every pair of [v] lies in exactly one triple.
bool is_steiner_triple_system(const SetFamily& triples);

struct PackingResult {
    SetFamily family;
    std::uint64_t graham_target = 0;  // ceil(binomial(m,k) / m)
};

/// Greedy colex-order packing of k-subsets of [m] with pairwise
/// intersections <= k-2.
PackingResult greedy_packing(int m, int k);

/// Single-layer well-covered k-graph on A = [a_size], B = [a_size+1,
/// a_size+b_size]: the packing S plus X u {b} for X in the shadow of S, b in B.
KGraph base_wellcovered(int a_size, int b_size, int k, const SetFamily& packing);

/// Chooses a packing of k-subsets of [m].
using Packer = std::function<SetFamily(int m, int k)>;

/// Steiner triple system when k = 3 and m is admissible, greedy otherwise.
SetFamily default_packer(int m, int k);

struct LayeredPlan {
    int n = 0;
    int k = 0;
    double split_ratio = 0.0;         // 0 when the parts were given explicitly
    std::vector<int> part_sizes;      // |A_0|, ..., |A_r|; parts are consecutive intervals of [n]
};

/// Partition [n] by the split rules: |A_0| = floor((1-a) n), then
/// |A_i| = floor((1-a) * remaining) while that is at least k; the final part
/// A_r is the remaining tail. Throws std::invalid_argument naming the
/// violated rule when no layer can be built.
LayeredPlan layered_plan(int n, int k, double split_ratio);

/// A plan with explicit part sizes (e.g. 19, 7, 4 for n = 30).
LayeredPlan layered_plan_from_parts(int k, std::vector<int> part_sizes);

struct LayerSummary {
    int a_size = 0;
    int b_size = 0;
    std::size_t packing_size = 0;
    std::int64_t edges = 0;
    std::int64_t cliques = 0;
};

struct LayeredResult {
    KGraph hypergraph;
    std::vector<LayerSummary> layers;
};

/// Union of the base constructions on (A_i, A_{i+1} u ... u A_r). Verifies
/// that e - c of the union equals the sum over layers.
LayeredResult layered_wellcovered(const LayeredPlan& plan, const Packer& packer = default_packer);

/// Example objects used in the reproduction suite.
KGraph example1_hypergraph();   // n = 11, k = 3: STS(7) on [7], B = [8,11]
LayeredResult example2_layers(); // n = 30, k = 3, parts 19 / 7 / 4

/// Graph on [9] whose six K4s and eleven non-edges form an independent
/// dominating set of G_{4,2} of size 17.
Graph fig4_left_graph();
DomPair fig4_left_dompair();
/// Six 4-sets covering the edges of K_{3,3,3} plus its nine within-part
/// pairs: a dominating set of G_{4,2} of size 15.
DomPair fig4_right_dompair();

}  // namespace incdom
