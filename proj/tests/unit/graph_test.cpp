#include <doctest.h>

#include <algorithm>
#include <random>

#include "incdom/bounds.hpp"
#include "incdom/constructions.hpp"
#include "incdom/errors.hpp"
#include "incdom/graph.hpp"
#include "incdom/hypergraph.hpp"
#include "incdom/random.hpp"
#include "oracles.hpp"

using namespace incdom;

namespace {

Mask mask_of(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) m |= element_bit(e);
    return m;
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

oracle::AdjMatrix to_matrix(const Graph& g) {
    oracle::AdjMatrix m(g.order());
    for (auto e : g.edges()) m.add(e.u, e.v);
    return m;
}

}  // namespace

TEST_CASE("Graph construction") {
    std::vector<Edge> loop{{2, 2}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    std::vector<Edge> out{{1, 4}};
    CHECK_THROWS_AS(Graph(3, out), std::invalid_argument);
    std::vector<Edge> dup{{1, 2}, {2, 1}};
    Graph g(3, dup);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(2, 1));
    CHECK_THROWS_AS(Graph::from_adjacency({element_bit(2), 0}), std::invalid_argument);
    CHECK(g.edge_family().size() == 1);
    CHECK(g.non_edge_family().size() == 2);
}

TEST_CASE("triangles: frozen values") {
    CHECK(triangles(complete_graph(4)).size() == 4);
    auto h9 = triangles(small_graph(SmallGraph::H9));
    SetFamily expect(9, 3,
                     {mask_of({1, 2, 5}), mask_of({2, 3, 7}), mask_of({3, 4, 6}), mask_of({4, 5, 8}), mask_of({1, 6, 9}),
                      mask_of({7, 8, 9})});
    CHECK(h9 == expect);
    CHECK(triangles(k_plus(4, 9)).size() == 10);
}

TEST_CASE("edge_stats") {
    auto k3 = complete_graph(3);
    auto st = edge_stats(k3);
    for (auto& [e, t] : st.edge_triangles) CHECK(t == 1);
    for (int t : st.vertex_triangles) CHECK(t == 1);

    auto kp = k_plus(4, 9);
    for (auto& [e, t] : edge_stats(kp).edge_triangles)
        if (e == Edge{1, 2} || e == Edge{3, 4}) CHECK(t == 5);
}

TEST_CASE("uncovered_edges") {
    auto e0 = uncovered_edges(k_plus(5, 9));
    REQUIRE(e0.size() == 4);
    for (auto e : e0) {
        CHECK(e.u == 5);
        CHECK(e.v >= 6);
    }
    std::vector<Edge> path{{1, 2}, {2, 3}, {3, 4}};
    CHECK(uncovered_edges(Graph(4, path)).size() == 3);
    CHECK(uncovered_edges(small_graph(SmallGraph::H9)).empty());
}

TEST_CASE("certificate: frozen values") {
    auto empty = certificate(Graph(5));
    CHECK(empty.edge_count == 0);
    CHECK(empty.triangle_count == 0);
    CHECK(empty.alpha == 0);
    CHECK(empty.beta_times_2 == 0);
    CHECK(empty.gamma_times_4 == 5 * 36);
    CHECK(empty.f_times_2 == 0);
    CHECK(empty.first_step_holds);
    CHECK(empty.final_inequality_holds);

    auto c = certificate(k_plus(5, 9));
    CHECK(c.edge_count == 22);
    CHECK(c.triangle_count == 8);
    CHECK(c.uncovered_edges.size() == 4);
    CHECK(c.f_times_2 == 24);

    CHECK(f_times_2(small_graph(SmallGraph::H5a)) == 8);
    CHECK(f_times_2(small_graph(SmallGraph::H5b)) == 8);
    CHECK(f_times_2(small_graph(SmallGraph::H9)) == 24);
    CHECK(f_times_2(k_plus(4, 8)) == 20);
    CHECK(f_times_2(k_plus(4, 9)) == 24);
}

TEST_CASE("certificate: seeded random corpus against naive counts") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 5, 20);
        const double p = unit_double(rng);
        auto g = random_graph(n, p, rng);
        auto c = certificate(g);
        auto o = oracle::naive_counts(to_matrix(g));
        REQUIRE(c.edge_count == o.edges);
        REQUIRE(c.triangle_count == o.triangles);
        REQUIRE(static_cast<long long>(c.uncovered_edges.size()) == o.e0);
        REQUIRE(c.alpha == o.alpha);
        REQUIRE(c.f_times_2 == 2 * (o.edges - o.triangles) - o.e0);
        // first step, doubled: sum d^2 + sum (t-1)(dx+dy-2t-2) = 2n|T| + 2|E| - 2 alpha
        REQUIRE(o.first_step_lhs2 == 2LL * n * o.triangles + 2 * o.edges - 2 * o.alpha);
        REQUIRE(c.first_step_holds);
        REQUIRE(c.final_inequality_holds);
        REQUIRE(c.f_times_2 <= 2 * bounds::lemma2_rhs(n));

        long long sum_t = 0;
        for (auto& [e, t] : edge_stats(g).edge_triangles) sum_t += t;
        REQUIRE(sum_t == 3 * c.triangle_count);
    }
}

TEST_CASE("graph_from_dompair") {
    DomPair all(SetFamily::complete(5, 2), SetFamily(5, 3));
    CHECK(graph_from_dompair(all).edge_count() == 0);

    DomPair one(SetFamily(4, 2, {mask_of({1, 2})}), SetFamily(4, 3, {mask_of({1, 2, 3})}));
    auto h = graph_from_dompair(one);
    CHECK(h.edges() == std::vector<Edge>{{1, 3}, {2, 3}});

    CHECK(isomorphic(graph_from_dompair(star_completed_dompair(9)), k_plus(5, 9)));
    CHECK_THROWS_AS(graph_from_dompair(DomPair(5, 4, 2)), std::invalid_argument);
}

TEST_CASE("is_minimal_dominating") {
    DomPair full(SetFamily::complete(5, 2), SetFamily::complete(5, 3));
    CHECK_FALSE(is_minimal_dominating(full));
    CHECK(is_minimal_dominating(fig4_right_dompair()));
    CHECK(is_minimal_dominating(star_completed_dompair(9)));
    CHECK_THROWS_AS(is_minimal_dominating(DomPair(5, 3, 2)), PreconditionError);

    auto m = minimalize(full);
    CHECK(verify_dominating(m).dominating);
    CHECK(is_minimal_dominating(m));
}

TEST_CASE("matching_set_M") {
    auto m = matching_set_M(k_plus(4, 9));
    CHECK(m == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(matching_set_M(complete_graph(6)).size() == 15);
    std::vector<Edge> p3{{1, 2}, {2, 3}};
    CHECK(matching_set_M(Graph(3, p3)).empty());
    CHECK(matching_set_M(k_plus(5, 9)).size() == 2);
}

TEST_CASE("isomorphism: frozen pairs") {
    CHECK_FALSE(isomorphic(small_graph(SmallGraph::H5a), small_graph(SmallGraph::H5b)));
    CHECK_FALSE(isomorphic(k_plus(2, 5), k_plus(3, 5)));
    CHECK(isomorphic(k_plus(4, 8), k_plus(4, 8)));
    CHECK_FALSE(isomorphic(Graph(4), Graph(5)));
}

TEST_CASE("isomorphism: seeded permutations and equivalence") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 1, 12);
        auto g = random_graph(n, unit_double(rng), rng);
        auto perm = random_permutation(n, rng);
        auto h = g.relabeled(perm);
        auto map = find_isomorphism(g, h);
        REQUIRE(map.has_value());
        REQUIRE(g.relabeled(*map) == h);
        // symmetry and transitivity through a second relabeling
        auto h2 = h.relabeled(random_permutation(n, rng));
        REQUIRE(isomorphic(h, g));
        REQUIRE(isomorphic(g, h2));
        // adding an edge breaks isomorphism (edge counts differ)
        if (g.edge_count() < binomial(n, 2)) {
            auto pairs = g.non_edge_family();
            auto more = g.edge_family().union_with(SetFamily(n, 2, {pairs.masks()[0]}));
            REQUIRE_FALSE(isomorphic(Graph::from_pairs(more), h));
        }
    }
}

TEST_CASE("isomorphism: agrees with brute force over all maps on small graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = uniform_int(rng, 2, 6);
        auto g = random_graph(n, 0.5, rng);
        auto h = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        bool brute = false;
        do {
            if (g.relabeled(perm) == h) {
                brute = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE(isomorphic(g, h) == brute);
    }
}
