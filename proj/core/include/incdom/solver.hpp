#pragma once

// Exact minimum (independent) dominating sets of the implicit inclusion graph
// G_{l,k}, plus exhaustive small-case enumerations.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "incdom/dompair.hpp"
#include "incdom/graph.hpp"

namespace incdom {

enum class SolveMode { Gamma, Independent };
enum class SolveStatus { Optimal, UpperBoundOnly, Infeasible };

const char* to_string(SolveMode m);
const char* to_string(SolveStatus s);

/// Instances with binomial(n,k) + binomial(n,l) above this are refused.
inline constexpr std::uint64_t kSearchSpaceGuard = 200000;

struct SolveOptions {
    double budget_seconds = std::numeric_limits<double>::infinity();
    std::vector<DomPair> warm_starts;
    /// Optional permutation of [n] (perm[i-1] = image of i). Changes the
    /// order in which the search visits vertices, not the instance.
    std::vector<int> ground_permutation;
};

struct SolveResult {
    std::size_t size = 0;
    DomPair witness;
    SolveStatus status = SolveStatus::Infeasible;
    std::size_t lower_bound = 0;
    std::uint64_t nodes_explored = 0;
    double elapsed = 0.0;  // seconds
};

/// Branch and bound. Deterministic for an infinite budget.
SolveResult solve(int n, int l, int k, SolveMode mode, const SolveOptions& options = {});

/// Every dominating set of G_{3,2} of size gamma32(n), n <= 6, by exhaustive
/// enumeration of vertex subsets.
std::vector<DomPair> enumerate_optimal_32(int n);

/// Distinct optimal dominating sets of G_{3,2} (n <= 9), collected from
/// solves under random relabellings. May return fewer than `count`.
std::vector<DomPair> sample_optimal_32(int n, std::size_t count, std::uint64_t seed);

struct NamedGraph {
    std::string name;  // "K+_{s,n-s}", "H5a", "H5b" or "H9"
    Graph graph;
};

/// Graphs that can arise as H(D) for an optimum of G_{3,2} on [n]:
/// K+ variants by residue class, plus H5a, H5b (n = 5) and H9 (n = 9).
std::vector<NamedGraph> extremal_graphs_32(int n);

/// Name of the extremal graph isomorphic to h, if any.
std::optional<std::string> classify_extremal_32(const Graph& h);

struct ExhaustiveFResult {
    std::int64_t max_f_times_2 = 0;
    std::vector<Graph> maximizers;        // one per isomorphism class
    std::uint64_t labeled_maximizers = 0;
    bool equality_clause_holds = true;    // E_0 empty, or n = 1 mod 4 and |E_0| even
};

/// Maximum of 2(|E| - |T| - |E_0|/2) over all labelled graphs on [n], n <= 7.
ExhaustiveFResult exhaustive_graphs_f(int n);

}  // namespace incdom
