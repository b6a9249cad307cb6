#pragma once

// Simple graphs on [n] and the triangle/edge statistics used to bound
// dominating sets of G_{3,2} through their associated graph H(D).

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "incdom/dompair.hpp"
#include "incdom/set_family.hpp"

namespace incdom {

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n (n <= 64), stored as one
/// neighbour mask per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on loops or endpoints outside [n].
    /// Repeated edges are merged.
    Graph(int n, std::span<const Edge> edges);
    /// From neighbour masks (index v-1 for vertex v). Checks symmetry and
    /// irreflexivity.
    static Graph from_adjacency(std::vector<Mask> adj);
    /// Edge set given as a family of 2-sets.
    static Graph from_pairs(const SetFamily& pairs);

    int order() const { return n_; }
    Mask neighbors(int v) const { return adj_[v - 1]; }
    int degree(int v) const { return cardinality(adj_[v - 1]); }
    bool adjacent(int u, int v) const { return (adj_[u - 1] & element_bit(v)) != 0; }
    std::size_t edge_count() const;

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;
    /// Edges as a family of 2-sets (colex order).
    SetFamily edge_family() const;
    /// Non-adjacent pairs as a family of 2-sets.
    SetFamily non_edge_family() const;

    /// Image under the vertex map v -> perm[v-1] (perm is a permutation of 1..n).
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

/// Vertex sets {x,y,z} spanning a triangle.
SetFamily triangles(const Graph& g);

struct EdgeStats {
    std::vector<std::pair<Edge, int>> edge_triangles;  // t(xy), lexicographic edge order
    std::vector<int> vertex_triangles;                 // t(x) at index x-1
};

EdgeStats edge_stats(const Graph& g);

/// Edges contained in no triangle (E_0), lexicographic order.
std::vector<Edge> uncovered_edges(const Graph& g);

/// Exact integer certificate for |E| - |T| - |E_0|/2 <= floor((n+1)^2/8).
/// Fractional quantities are stored scaled so that every field is an integer.
struct GraphCertificate {
    int n = 0;
    std::int64_t edge_count = 0;
    std::int64_t triangle_count = 0;
    std::vector<Edge> uncovered_edges;
    std::int64_t covered_edge_count = 0;
    std::int64_t f_times_2 = 0;      // 2(|E| - |T|) - |E_0|
    std::int64_t alpha = 0;          // sum over triangles xyz of alpha_xyz
    std::int64_t beta_times_2 = 0;   // 2 * beta
    std::int64_t gamma_times_4 = 0;  // 4 * gamma
    bool first_step_holds = false;
    bool final_inequality_holds = false;
};

GraphCertificate certificate(const Graph& g);

/// 2 * (|E| - |T| - |E_0|/2).
std::int64_t f_times_2(const Graph& g);

/// H(D): edges are the pairs inside some upper member that are not lower
/// members. Requires (l,k) = (3,2).
Graph graph_from_dompair(const DomPair& d);

/// True when dropping any single member of a dominating set breaks domination.
/// Throws PreconditionError when d does not dominate.
bool is_minimal_dominating(const DomPair& d);

/// Drops redundant members (lower level first, colex order) until minimal.
/// Throws PreconditionError when d does not dominate.
DomPair minimalize(const DomPair& d);

/// Edges xy with N(x) - {y} = N(y) - {x}.
std::vector<Edge> matching_set_M(const Graph& g);

/// A vertex map v -> mapping[v-1] carrying g1 onto g2, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);
inline bool isomorphic(const Graph& g1, const Graph& g2) { return find_isomorphism(g1, g2).has_value(); }

}  // namespace incdom
