#include <doctest.h>

#include "incdom/bounds.hpp"
#include "incdom/constructions.hpp"
#include "incdom/graph.hpp"
#include "incdom/hypergraph.hpp"

using namespace incdom;

TEST_CASE("k_plus: frozen values") {
    auto g = k_plus(4, 9);
    CHECK(g.edge_count() == 22);
    auto c = certificate(g);
    CHECK(c.triangle_count == 10);
    CHECK(c.uncovered_edges.empty());
    CHECK(c.f_times_2 == 24);

    auto h = k_plus(5, 9);
    auto ch = certificate(h);
    CHECK(ch.edge_count == 22);
    CHECK(ch.triangle_count == 8);
    CHECK(ch.uncovered_edges.size() == 4);
    CHECK(ch.f_times_2 == 24);

    CHECK(f_times_2(k_plus(4, 8)) == 2 * bounds::lemma2_rhs(8));
    CHECK_THROWS_AS(k_plus(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(k_plus(5, 5), std::invalid_argument);
}

TEST_CASE("k_plus: closed forms for 2 <= s < n <= 24") {
    for (int n = 3; n <= 24; ++n)
        for (int s = 2; s < n; ++s) {
            const std::int64_t expect2 = (s % 2 == 0) ? s * (n - s + 1) : (s - 1) + s * (n - s);
            REQUIRE(f_times_2(k_plus(s, n)) == expect2);
        }
}

TEST_CASE("k_plus: residue-class variants reach the bound") {
    for (int n = 5; n <= 24; ++n) {
        std::vector<int> sizes;
        switch (n % 4) {
            case 0: sizes = {n / 2}; break;
            case 1: sizes = {(n - 1) / 2, (n + 1) / 2, (n + 3) / 2}; break;
            case 2: sizes = {(n + 2) / 2}; break;
            case 3: sizes = {(n + 1) / 2}; break;
        }
        for (int s : sizes) REQUIRE(f_times_2(k_plus(s, n)) == 2 * bounds::lemma2_rhs(n));
    }
}

TEST_CASE("small graphs") {
    auto a = small_graph(SmallGraph::H5a);
    CHECK(a.edge_count() == 7);
    CHECK(triangles(a).size() == 3);
    CHECK(uncovered_edges(a).empty());
    CHECK(f_times_2(a) == 8);

    auto b = small_graph(SmallGraph::H5b);
    CHECK(b.edge_count() == 8);
    CHECK(triangles(b).size() == 4);
    CHECK(f_times_2(b) == 8);

    auto h9 = small_graph(SmallGraph::H9);
    CHECK(h9.edge_count() == 18);
    CHECK(f_times_2(h9) == 24);
    CHECK(uncovered_edges(h9).empty());
    for (int v = 1; v <= 9; ++v) CHECK(h9.degree(v) == 4);

    CHECK(parse_small_graph("h5b") == SmallGraph::H5b);
    CHECK(parse_small_graph("H9") == SmallGraph::H9);
    CHECK_THROWS_AS(parse_small_graph("h7"), std::invalid_argument);
}

TEST_CASE("star_completed_dompair") {
    for (int n : {9, 13, 17, 21}) {
        auto d = star_completed_dompair(n);
        CHECK(static_cast<std::int64_t>(d.size()) == bounds::gamma32(n));
        CHECK(verify_dominating(d).dominating);
        CHECK_FALSE(verify_independent(d).independent);
        CHECK(isomorphic(graph_from_dompair(d), k_plus((n + 1) / 2, n)));
    }
    CHECK(star_completed_dompair(9).size() == 24);
    CHECK(star_completed_dompair(13).size() == 54);
    CHECK_THROWS_AS(star_completed_dompair(11), std::invalid_argument);
    CHECK_THROWS_AS(star_completed_dompair(5), std::invalid_argument);
}

TEST_CASE("steiner_triple_system") {
    for (int v : {7, 9, 13, 15, 19, 21, 25, 27, 31, 33, 37, 39, 43, 45}) {
        auto s = steiner_triple_system(v);
        CHECK(s.size() == static_cast<std::size_t>(v * (v - 1) / 6));
        CHECK(is_steiner_triple_system(s));
        // independent pair coverage count
        for (int x = 1; x <= v; ++x)
            for (int y = x + 1; y <= v; ++y) {
                int hits = 0;
                for (Mask t : s.masks()) hits += is_subset(element_bit(x) | element_bit(y), t);
                REQUIRE(hits == 1);
            }
    }
    CHECK(steiner_triple_system(19).size() == 57);
    for (int v : {3, 4, 5, 6, 8, 10, 11, 12, 67}) CHECK_THROWS_AS(steiner_triple_system(v), std::domain_error);
    auto fano = steiner_triple_system(7);
    CHECK_FALSE(is_steiner_triple_system(SetFamily(7, 3, {fano.masks()[0]})));
}

TEST_CASE("greedy_packing") {
    CHECK(greedy_packing(4, 3).family.size() == 1);
    auto p7 = greedy_packing(7, 3);
    CHECK(p7.family.size() == 7);
    CHECK(is_steiner_triple_system(p7.family));
    for (int m = 4; m <= 12; ++m)
        for (int k = 2; k <= 5 && k <= m; ++k) {
            auto p = greedy_packing(m, k);
            REQUIRE(is_packing(p.family));
            REQUIRE(shadow(p.family).size() == static_cast<std::size_t>(k) * p.family.size());
            REQUIRE(p.graham_target == (binomial(m, k) + m - 1) / m);
        }
}

TEST_CASE("base_wellcovered") {
    auto h = base_wellcovered(7, 4, 3, steiner_triple_system(7));
    CHECK(h.edge_count() == 91);
    CHECK(cliques(h).size() == 28);
    CHECK(h == example1_hypergraph());

    auto first = base_wellcovered(19, 11, 3, steiner_triple_system(19));
    CHECK(first.edge_count() == 1938);
    CHECK(cliques(first).size() == 627);

    Mask one = element_bit(1) | element_bit(2) | element_bit(3);
    auto tiny = base_wellcovered(3, 1, 3, SetFamily(3, 3, {one}));
    CHECK(tiny.edge_count() == 4);
    CHECK(cliques(tiny).size() == 1);
    CHECK(e_minus_c(tiny) == 3);

    CHECK_THROWS_AS(base_wellcovered(7, 4, 3, SetFamily::complete(7, 3)), std::invalid_argument);
}

TEST_CASE("layered_plan") {
    auto p = layered_plan(30, 3, bounds::alpha_star(3));
    int total = 0;
    for (int s : p.part_sizes) total += s;
    CHECK(total == 30);
    CHECK(p.part_sizes.front() == 19);
    CHECK(p.part_sizes.size() >= 2);
    CHECK_THROWS_AS(layered_plan(4, 3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(layered_plan(30, 3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(layered_plan(30, 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(layered_plan_from_parts(3, {2, 5}), std::invalid_argument);
}

TEST_CASE("layered_wellcovered: example 2 and planned instances") {
    auto ex2 = example2_layers();
    CHECK(ex2.hypergraph.edge_count() == 2029);
    CHECK(cliques(ex2.hypergraph).size() == 655);
    auto d = dompair_from_wellcovered(ex2.hypergraph);
    CHECK(d.size() == 2686);

    for (auto [k, n] : {std::pair{3, 30}, {4, 25}, {5, 20}, {3, 16}, {4, 12}}) {
        auto r = layered_wellcovered(layered_plan(n, k, bounds::alpha_star(k)));
        REQUIRE(is_well_covered(r.hypergraph).well_covered);
        std::int64_t e = 0, c = 0;
        for (auto& l : r.layers) {
            e += l.edges;
            c += l.cliques;
        }
        CHECK(e == static_cast<std::int64_t>(r.hypergraph.edge_count()));
        CHECK(c == static_cast<std::int64_t>(cliques(r.hypergraph).size()));
        auto dp = dompair_from_wellcovered(r.hypergraph);
        CHECK(static_cast<std::int64_t>(dp.size()) == static_cast<std::int64_t>(binomial(n, k)) - e + c);
        CHECK(verify_independent(dp).independent);
    }
}

TEST_CASE("G_{4,2} witnesses on [9]") {
    auto left = fig4_left_dompair();
    CHECK(left.size() == 17);
    CHECK(left.upper().size() == 6);
    CHECK(left.lower().size() == 11);
    for (Mask q : left.upper().masks())
        for_each_subset_of_size(q, 2, [&](Mask p) { CHECK(fig4_left_graph().edge_family().contains(p)); });
    auto right = fig4_right_dompair();
    CHECK(right.size() == 15);
    CHECK(right.lower().size() == 9);
}
