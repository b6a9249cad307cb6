#include "incdom/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "incdom/errors.hpp"

namespace incdom {

namespace {

Graph graph_from_edge_list(int n, std::initializer_list<std::pair<int, int>> list) {
    std::vector<Edge> edges;
    for (auto [u, v] : list) edges.push_back({std::min(u, v), std::max(u, v)});
    return Graph(n, edges);
}

Mask set_of(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) m |= element_bit(e);
    return m;
}

}  // namespace

Graph k_plus(int s, int n) {
    if (n > kMaxGround || !(1 < s && s < n)) throw std::invalid_argument("k_plus requires 1 < s < n <= 64");
    std::vector<Edge> edges;
    for (int i = 1; i <= s / 2; ++i) edges.push_back({2 * i - 1, 2 * i});
    for (int u = 1; u <= s; ++u)
        for (int v = s + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph small_graph(SmallGraph which) {
    switch (which) {
        case SmallGraph::H5a:
            return graph_from_edge_list(5, {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}});
        case SmallGraph::H5b:
            return graph_from_edge_list(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
        case SmallGraph::H9:
            return graph_from_edge_list(9, {{1, 2}, {2, 3}, {3, 4}, {4, 6}, {3, 6}, {3, 7}, {2, 7}, {2, 5}, {1, 5},
                                            {1, 9}, {8, 9}, {7, 8}, {7, 9}, {6, 9}, {1, 6}, {4, 5}, {5, 8}, {4, 8}});
    }
    throw std::invalid_argument("unknown small graph");
}

SmallGraph parse_small_graph(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "h5a") return SmallGraph::H5a;
    if (s == "h5b") return SmallGraph::H5b;
    if (s == "h9") return SmallGraph::H9;
    throw std::invalid_argument("unknown small graph '" + std::string(name) + "'");
}

DomPair star_completed_dompair(int n) {
    if (n % 4 != 1 || n < 9 || n > kMaxGround) throw std::invalid_argument("star completion needs n = 1 mod 4 and 9 <= n <= 64");
    const int s = (n + 1) / 2;
    const int center = s;  // unmatched vertex of the matching side
    const Graph h = k_plus(s, n);

    const SetFamily tri = triangles(h);
    const SetFamily non_edges = h.non_edge_family();
    std::vector<Mask> upper(tri.masks().begin(), tri.masks().end());
    std::vector<Mask> lower(non_edges.masks().begin(), non_edges.masks().end());
    const int leaves = (n - 1) / 2;
    for (int i = 1; i <= leaves / 2; ++i) {
        const int x = s + i;
        const int y = n + 1 - i;
        upper.push_back(set_of({center, x, y}));
        lower.push_back(set_of({x, y}));  // already a non-edge
    }
    return DomPair(SetFamily::from_masks_dedup(n, 2, std::move(lower)), SetFamily::from_masks_dedup(n, 3, std::move(upper)));
}

namespace {

// Bose: v = 6t + 3 on Z_m x Z_3, m = 2t + 1, with the idempotent commutative
// quasigroup x o y = (x + y)(m + 1)/2 mod m.
std::vector<Mask> bose_triples(int v) {
    const int m = v / 3;
    auto pt = [m](int x, int i) { return element_bit(x + ((i % 3) * m) + 1); };
    auto op = [m](int x, int y) { return ((x + y) * ((m + 1) / 2)) % m; };
    std::vector<Mask> out;
    for (int x = 0; x < m; ++x) out.push_back(pt(x, 0) | pt(x, 1) | pt(x, 2));
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) out.push_back(pt(x, i) | pt(y, i) | pt(op(x, y), i + 1));
    return out;
}

// Skolem: v = 6t + 1 on {inf} u Z_2t x Z_3 with the half-idempotent
// commutative quasigroup obtained by relabelling the addition table of Z_2t.
std::vector<Mask> skolem_triples(int v) {
    const int two_t = (v - 1) / 3;
    const int t = two_t / 2;
    auto pt = [two_t](int x, int i) { return element_bit(x + ((i % 3) * two_t) + 1); };
    const Mask inf = element_bit(v);
    auto op = [two_t, t](int x, int y) {
        const int j = (x + y) % two_t;
        return j % 2 == 0 ? j / 2 : t + (j - 1) / 2;
    };
    std::vector<Mask> out;
    for (int x = 0; x < t; ++x) out.push_back(pt(x, 0) | pt(x, 1) | pt(x, 2));
    for (int x = 0; x < t; ++x)
        for (int i = 0; i < 3; ++i) out.push_back(inf | pt(x + t, i) | pt(x, i + 1));
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < two_t; ++x)
            for (int y = x + 1; y < two_t; ++y) out.push_back(pt(x, i) | pt(y, i) | pt(op(x, y), i + 1));
    return out;
}

}  // namespace

SetFamily steiner_triple_system(int v) {
    if (v < 7 || v > kMaxGround || (v % 6 != 1 && v % 6 != 3))
        throw std::domain_error("no Steiner triple system of order " + std::to_string(v) + " (need v = 1 or 3 mod 6, 7 <= v <= 64)");
    SetFamily sts(v, 3, v % 6 == 3 ? bose_triples(v) : skolem_triples(v));
    if (!is_steiner_triple_system(sts)) throw std::logic_error("Steiner triple system construction failed validation");
    return sts;
}

bool is_steiner_triple_system(const SetFamily& triples) {
    if (triples.uniformity() != 3) return false;
    const int v = triples.ground();
    std::vector<int> hits(static_cast<std::size_t>(binomial(v, 2)), 0);
    for (Mask t : triples.masks()) for_each_facet(t, [&](Mask pair) { ++hits[colex_rank(pair)]; });
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

PackingResult greedy_packing(int m, int k) {
    if (k < 1 || m < k || m > kMaxGround) throw std::invalid_argument("greedy_packing requires 1 <= k <= m <= 64");
    std::unordered_set<Mask> covered;
    std::vector<Mask> chosen;
    for (Mask x : KSubsets(m, k)) {
        bool free = true;
        for_each_facet(x, [&](Mask f) { free = free && !covered.contains(f); });
        if (!free) continue;
        chosen.push_back(x);
        for_each_facet(x, [&](Mask f) { covered.insert(f); });
    }
    const std::uint64_t total = binomial(m, k);
    return {SetFamily(m, k, std::move(chosen)), (total + static_cast<std::uint64_t>(m) - 1) / static_cast<std::uint64_t>(m)};
}

namespace {

// Edges of one layer: packing (on [a_size], shifted into A by `offset`) plus
// X u {b} for X in its shadow and b in `b_side`.
std::vector<Mask> layer_edges(int offset, const SetFamily& packing, Mask b_side) {
    std::vector<Mask> out;
    for (Mask x : packing.masks()) out.push_back(x << offset);
    const SetFamily facets = shadow(packing);
    for (Mask x : facets.masks())
        for (Mask rest = b_side; rest != 0; rest &= rest - 1) out.push_back((x << offset) | (rest & (~rest + 1)));
    return out;
}

void check_packing(const SetFamily& packing, int a_size, int k) {
    if (packing.ground() != a_size || packing.uniformity() != k)
        throw std::invalid_argument("packing must consist of " + std::to_string(k) + "-subsets of [" + std::to_string(a_size) + "]");
    if (!is_packing(packing)) throw std::invalid_argument("packing has two members sharing k-1 elements");
}

}  // namespace

KGraph base_wellcovered(int a_size, int b_size, int k, const SetFamily& packing) {
    if (k < 2) throw std::invalid_argument("base construction requires k >= 2");
    if (b_size < 1 || a_size < 1 || a_size + b_size > kMaxGround) throw std::invalid_argument("base construction requires |B| >= 1 and |A|+|B| <= 64");
    check_packing(packing, a_size, k);
    const int n = a_size + b_size;
    const Mask b_side = ground_mask(n) & ~ground_mask(a_size);
    return KGraph(SetFamily(n, k, layer_edges(0, packing, b_side)));
}

SetFamily default_packer(int m, int k) {
    if (k == 3 && m >= 7 && (m % 6 == 1 || m % 6 == 3)) return steiner_triple_system(m);
    return greedy_packing(m, k).family;
}

LayeredPlan layered_plan(int n, int k, double split_ratio) {
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw std::invalid_argument("split ratio must lie in (0,1)");
    if (k < 2 || n > kMaxGround) throw std::invalid_argument("layered plan requires k >= 2 and n <= 64");
    LayeredPlan plan{n, k, split_ratio, {}};
    const double keep = 1.0 - split_ratio;
    const int a0 = static_cast<int>(std::floor(keep * n));
    if (a0 < k) throw std::invalid_argument("rule (i): |A_0| = floor((1-a)n) = " + std::to_string(a0) + " is smaller than k");
    if (a0 >= n) throw std::invalid_argument("rule (i): A_0 leaves no vertices for B");
    plan.part_sizes.push_back(a0);
    int remaining = n - a0;
    for (;;) {
        const int next = static_cast<int>(std::floor(keep * remaining));
        if (next < k) {  // rule (iii): the tail cannot be split further
            plan.part_sizes.push_back(remaining);
            break;
        }
        plan.part_sizes.push_back(next);  // rule (ii)
        remaining -= next;
    }
    return plan;
}

LayeredPlan layered_plan_from_parts(int k, std::vector<int> part_sizes) {
    if (part_sizes.size() < 2) throw std::invalid_argument("a layered plan needs at least two parts");
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw std::invalid_argument("parts must be non-empty");
        n += s;
    }
    if (n > kMaxGround) throw std::invalid_argument("parts exceed 64 vertices");
    if (k < 2) throw std::invalid_argument("layered plan requires k >= 2");
    if (part_sizes.front() < k) throw std::invalid_argument("the first part must have at least k vertices");
    return {n, k, 0.0, std::move(part_sizes)};
}

LayeredResult layered_wellcovered(const LayeredPlan& plan, const Packer& packer) {
    const int n = plan.n;
    const int k = plan.k;
    LayeredResult result;
    std::vector<Mask> all_edges;
    int offset = 0;
    std::int64_t sum_e = 0, sum_c = 0;
    for (std::size_t i = 0; i + 1 < plan.part_sizes.size(); ++i) {
        const int a = plan.part_sizes[i];
        const Mask b_side = ground_mask(n) & ~ground_mask(offset + a);
        const SetFamily packing = packer(a, k);
        check_packing(packing, a, k);
        auto edges = layer_edges(offset, packing, b_side);
        const KGraph layer(SetFamily(n, k, edges));
        LayerSummary s{a, n - offset - a, packing.size(), static_cast<std::int64_t>(layer.edge_count()),
                       static_cast<std::int64_t>(cliques(layer).size())};
        sum_e += s.edges;
        sum_c += s.cliques;
        result.layers.push_back(s);
        all_edges.insert(all_edges.end(), edges.begin(), edges.end());
        offset += a;
    }
    result.hypergraph = KGraph(SetFamily(n, k, std::move(all_edges)));
    const auto total_c = static_cast<std::int64_t>(cliques(result.hypergraph).size());
    if (static_cast<std::int64_t>(result.hypergraph.edge_count()) != sum_e || total_c != sum_c)
        throw std::logic_error("layers interact: e - c of the union differs from the sum over layers");
    return result;
}

KGraph example1_hypergraph() { return base_wellcovered(7, 4, 3, steiner_triple_system(7)); }

LayeredResult example2_layers() { return layered_wellcovered(layered_plan_from_parts(3, {19, 7, 4})); }

Graph fig4_left_graph() {
    return graph_from_edge_list(9, {{1, 2}, {6, 7}, {8, 9}, {5, 9}, {3, 4}, {4, 5}, {1, 6}, {2, 6}, {2, 7},
                                    {3, 7}, {3, 6}, {4, 6}, {4, 7}, {1, 7}, {1, 8}, {2, 8}, {2, 9}, {1, 9},
                                    {5, 7}, {5, 6}, {5, 8}, {3, 8}, {3, 9}, {4, 9}, {4, 8}});
}

DomPair fig4_left_dompair() {
    const Graph g = fig4_left_graph();
    SetFamily upper(9, 4,
                    {set_of({1, 2, 6, 7}), set_of({3, 4, 6, 7}), set_of({4, 5, 6, 7}), set_of({1, 2, 8, 9}),
                     set_of({3, 4, 8, 9}), set_of({4, 5, 8, 9})});
    return DomPair(g.non_edge_family(), std::move(upper));
}

DomPair fig4_right_dompair() {
    SetFamily lower(9, 2,
                    {set_of({1, 2}), set_of({1, 3}), set_of({2, 3}), set_of({4, 5}), set_of({4, 6}), set_of({5, 6}),
                     set_of({7, 8}), set_of({7, 9}), set_of({8, 9})});
    SetFamily upper(9, 4,
                    {set_of({1, 2, 4, 7}), set_of({1, 2, 5, 8}), set_of({1, 2, 6, 9}), set_of({3, 4, 5, 9}),
                     set_of({3, 6, 7, 8}), set_of({4, 5, 7, 8})});
    return DomPair(std::move(lower), std::move(upper));
}

}  // namespace incdom
