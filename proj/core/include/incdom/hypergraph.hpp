#pragma once

// k-uniform hypergraphs, their (k+1)-cliques, and the domination and
// independence verifiers for the implicit inclusion graph G_{l,k}.

#include <cstdint>
#include <optional>
#include <unordered_set>

#include "incdom/dompair.hpp"
#include "incdom/set_family.hpp"

namespace incdom {

/// k-uniform hypergraph on [n] with constant-time edge lookup.
class KGraph {
public:
    KGraph() = default;
    explicit KGraph(SetFamily edges);

    int ground() const { return edges_.ground(); }
    int uniformity() const { return edges_.uniformity(); }
    const SetFamily& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(Mask e) const { return index_.contains(e); }

    friend bool operator==(const KGraph& a, const KGraph& b) { return a.edges_ == b.edges_; }

private:
    SetFamily edges_;
    std::unordered_set<Mask> index_;
};

/// All (k+1)-sets whose k-subsets are all edges.
SetFamily cliques(const KGraph& h);

struct WellCoveredResult {
    bool well_covered = true;
    std::optional<VertexSet> uncovered_edge;  // colex-least edge in no clique
};

WellCoveredResult is_well_covered(const KGraph& h);

/// e(H) - c(H).
std::int64_t e_minus_c(const KGraph& h);

/// D(H) in G_{k+1,k}: non-edges on level k, cliques on level k+1.
/// Throws PreconditionError (with witness) when h is not well-covered.
DomPair dompair_from_wellcovered(const KGraph& h);

/// H(D): the k-sets outside d.lower. Throws PreconditionError when d is not
/// an independent dominating set of G_{k+1,k}.
KGraph wellcovered_from_dompair(const DomPair& d);

struct DominationResult {
    bool dominating = true;
    std::optional<VertexSet> witness;  // colex-least undominated vertex, k-level before l-level
};

/// Domination check on the implicit G_{l,k}. `threads` > 1 splits the scan;
/// the witness does not depend on it.
DominationResult verify_dominating(const DomPair& d, int threads = 1);

struct IndependenceResult {
    bool independent = true;
    std::optional<VertexSet> lower_witness;  // member of d.lower ...
    std::optional<VertexSet> upper_witness;  // ... contained in this member of d.upper
};

IndependenceResult verify_independent(const DomPair& d);

}  // namespace incdom
