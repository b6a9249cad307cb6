#include "incdom/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "incdom/errors.hpp"

namespace incdom {

KGraph::KGraph(SetFamily edges) : edges_(std::move(edges)) {
    index_.reserve(edges_.size());
    for (Mask e : edges_.masks()) index_.insert(e);
}

SetFamily cliques(const KGraph& h) {
    const int n = h.ground();
    const Mask all = ground_mask(n);
    std::unordered_set<Mask> found;
    for (Mask e : h.edges().masks()) {
        for (Mask rest = all & ~e; rest != 0; rest &= rest - 1) {
            const Mask v = rest & (~rest + 1);
            const Mask candidate = e | v;
            if (found.contains(candidate)) continue;
            bool all_edges = true;
            for_each_facet(candidate, [&](Mask facet) { all_edges = all_edges && h.has_edge(facet); });
            if (all_edges) found.insert(candidate);
        }
    }
    return SetFamily(n, h.uniformity() + 1, std::vector<Mask>(found.begin(), found.end()));
}

WellCoveredResult is_well_covered(const KGraph& h) {
    const Mask all = ground_mask(h.ground());
    for (Mask e : h.edges().masks()) {  // colex order, so the first failure is the least
        bool covered = false;
        for (Mask rest = all & ~e; rest != 0 && !covered; rest &= rest - 1) {
            const Mask v = rest & (~rest + 1);
            bool ok = true;
            for (Mask er = e; er != 0 && ok; er &= er - 1) ok = h.has_edge((e & ~(er & (~er + 1))) | v);
            covered = ok;
        }
        if (!covered) return {false, VertexSet(e, h.ground())};
    }
    return {};
}

std::int64_t e_minus_c(const KGraph& h) {
    return static_cast<std::int64_t>(h.edge_count()) - static_cast<std::int64_t>(cliques(h).size());
}

DomPair dompair_from_wellcovered(const KGraph& h) {
    const auto wc = is_well_covered(h);
    if (!wc.well_covered) throw PreconditionError("hypergraph is not well-covered", wc.uncovered_edge->to_string());
    return DomPair(h.edges().complement(), cliques(h));
}

KGraph wellcovered_from_dompair(const DomPair& d) {
    if (d.l() != d.k() + 1) throw std::invalid_argument("the correspondence needs l = k + 1");
    const auto ind = verify_independent(d);
    if (!ind.independent)
        throw PreconditionError("set is not independent", ind.lower_witness->to_string() + " in " + ind.upper_witness->to_string());
    const auto dom = verify_dominating(d);
    if (!dom.dominating) throw PreconditionError("set is not dominating", dom.witness->to_string());
    return KGraph(d.lower().complement());
}

namespace {

// Scan `count` consecutive l- or k-sets starting at colex rank `first`,
// returning the first one that is undominated.
template <class Pred>
std::optional<Mask> first_failure(int n, int size, std::uint64_t first, std::uint64_t count, Pred&& undominated) {
    if (count == 0) return std::nullopt;
    Mask m = colex_unrank_mask(first, n, size);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (undominated(m)) return m;
        m = next_same_popcount(m, n);
    }
    return std::nullopt;
}

template <class Pred>
std::optional<Mask> scan_level(int n, int size, int threads, Pred&& undominated) {
    const std::uint64_t total = binomial(n, size);
    if (size == 0) return undominated(Mask{0}) ? std::optional<Mask>(Mask{0}) : std::nullopt;
    const int workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, std::max<std::uint64_t>(total, 1)));
    if (workers == 1) return first_failure(n, size, 0, total, undominated);
    std::vector<std::optional<Mask>> local(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(total, chunk * w);
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { local[w] = first_failure(n, size, lo, hi - lo, undominated); });
    }
    for (auto& t : pool) t.join();
    for (const auto& r : local)  // chunks are in rank order
        if (r) return r;
    return std::nullopt;
}

}  // namespace

DominationResult verify_dominating(const DomPair& d, int threads) {
    const int n = d.ground();
    const int k = d.k();
    const int l = d.l();

    std::unordered_set<Mask> lower(d.lower().masks().begin(), d.lower().masks().end());
    std::unordered_set<Mask> upper(d.upper().masks().begin(), d.upper().masks().end());

    // k-sets covered from above: all k-subsets of upper members
    std::unordered_set<Mask> covered;
    covered.reserve(d.upper().size() * binomial(l, k));
    for (Mask b : d.upper().masks()) for_each_subset_of_size(b, k, [&](Mask a) { covered.insert(a); });

    auto k_undominated = [&](Mask a) { return !lower.contains(a) && !covered.contains(a); };
    if (auto bad = scan_level(n, k, threads, k_undominated)) return {false, VertexSet(*bad, n)};

    const bool enumerate_subsets = binomial(l, k) <= d.lower().size();
    auto l_undominated = [&](Mask b) {
        if (upper.contains(b)) return false;
        if (enumerate_subsets) {
            bool hit = false;
            for_each_subset_of_size(b, k, [&](Mask a) { hit = hit || lower.contains(a); });
            return !hit;
        }
        for (Mask a : d.lower().masks())
            if (is_subset(a, b)) return false;
        return true;
    };
    if (auto bad = scan_level(n, l, threads, l_undominated)) return {false, VertexSet(*bad, n)};
    return {};
}

IndependenceResult verify_independent(const DomPair& d) {
    for (Mask a : d.lower().masks())
        for (Mask b : d.upper().masks())
            if (is_subset(a, b)) return {false, VertexSet(a, d.ground()), VertexSet(b, d.ground())};
    return {};
}

}  // namespace incdom
