#include "incdom/random.hpp"

#include <unordered_set>

#include "incdom/hypergraph.hpp"

namespace incdom {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (unit_double(rng) < p) edges.push_back({u, v});
    return Graph(n, edges);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
    return p;
}

DomPair random_dompair(int n, int l, int k, double p, std::mt19937_64& rng) {
    std::vector<Mask> lo, up;
    for (Mask m : KSubsets(n, k))
        if (unit_double(rng) < p) lo.push_back(m);
    for (Mask m : KSubsets(n, l))
        if (unit_double(rng) < p) up.push_back(m);
    return DomPair(SetFamily(n, k, std::move(lo)), SetFamily(n, l, std::move(up)));
}

DomPair random_dominating(int n, int l, int k, double p, std::mt19937_64& rng) {
    const DomPair seed = random_dompair(n, l, k, p, rng);
    std::unordered_set<Mask> lower(seed.lower().masks().begin(), seed.lower().masks().end());
    std::unordered_set<Mask> upper(seed.upper().masks().begin(), seed.upper().masks().end());
    // k-level: add the k-set itself when no chosen l-set contains it
    for (Mask a : KSubsets(n, k)) {
        if (lower.contains(a)) continue;
        bool hit = false;
        for (Mask b : upper)
            if (is_subset(a, b)) {
                hit = true;
                break;
            }
        if (!hit) lower.insert(a);
    }
    for (Mask b : KSubsets(n, l)) {
        if (upper.contains(b)) continue;
        bool hit = false;
        for_each_subset_of_size(b, k, [&](Mask a) { hit = hit || lower.contains(a); });
        if (!hit) upper.insert(b);
    }
    return DomPair(SetFamily(n, k, {lower.begin(), lower.end()}), SetFamily(n, l, {upper.begin(), upper.end()}));
}

}  // namespace incdom
