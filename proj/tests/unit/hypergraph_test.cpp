#include <doctest.h>

#include <random>

#include "incdom/constructions.hpp"
#include "incdom/errors.hpp"
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

std::vector<int> oracle_indices(const oracle::Bipartite& g, const DomPair& d) {
    std::vector<int> out;
    for (auto f : {&d.lower(), &d.upper()})
        for (auto s : f->members()) out.push_back(g.index_of(s.elements()));
    return out;
}

}  // namespace

TEST_CASE("cliques") {
    KGraph k4(SetFamily::complete(4, 3));
    CHECK(cliques(k4).size() == 1);
    CHECK(cliques(example1_hypergraph()).size() == 28);
    CHECK(cliques(example2_layers().hypergraph).size() == 655);
    CHECK(cliques(KGraph(SetFamily(6, 3))).empty());
}

TEST_CASE("is_well_covered") {
    KGraph single(SetFamily(5, 3, {mask_of({1, 2, 3})}));
    auto r = is_well_covered(single);
    CHECK_FALSE(r.well_covered);
    REQUIRE(r.uncovered_edge.has_value());
    CHECK(r.uncovered_edge->bits() == mask_of({1, 2, 3}));
    CHECK(is_well_covered(example1_hypergraph()).well_covered);
    CHECK(is_well_covered(KGraph(SetFamily(6, 3))).well_covered);
}

TEST_CASE("dompair_from_wellcovered") {
    auto d1 = dompair_from_wellcovered(example1_hypergraph());
    CHECK(d1.size() == 102);
    CHECK(d1.upper().size() == 28);
    CHECK(d1.lower().size() == 74);

    KGraph k4(SetFamily::complete(4, 3));
    auto d = dompair_from_wellcovered(k4);
    CHECK(d.lower().empty());
    CHECK(d.upper().size() == 1);

    KGraph single(SetFamily(5, 3, {mask_of({1, 2, 3})}));
    CHECK_THROWS_AS(dompair_from_wellcovered(single), PreconditionError);
}

TEST_CASE("wellcovered_from_dompair") {
    auto h = example1_hypergraph();
    CHECK(wellcovered_from_dompair(dompair_from_wellcovered(h)) == h);

    DomPair all_lower(SetFamily::complete(6, 3), SetFamily(6, 4));
    CHECK(wellcovered_from_dompair(all_lower).edge_count() == 0);

    CHECK_THROWS_AS(wellcovered_from_dompair(fig4_right_dompair()), std::invalid_argument);
    DomPair not_dom(SetFamily(6, 2), SetFamily(6, 3));
    CHECK_THROWS_AS(wellcovered_from_dompair(not_dom), PreconditionError);
}

TEST_CASE("fig4 left graph is the complement of its non-edge set") {
    auto d = fig4_left_dompair();
    CHECK(d.lower() == fig4_left_graph().non_edge_family());
    CHECK(fig4_left_graph().edge_count() == 25);
}

TEST_CASE("verify_dominating: frozen instances") {
    auto right = fig4_right_dompair();
    CHECK(right.size() == 15);
    CHECK(verify_dominating(right).dominating);
    auto left = fig4_left_dompair();
    CHECK(left.size() == 17);
    CHECK(verify_dominating(left).dominating);

    DomPair empty(6, 3, 2);
    auto r = verify_dominating(empty);
    CHECK_FALSE(r.dominating);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->bits() == mask_of({1, 2}));
}

TEST_CASE("verify_independent: frozen instances") {
    CHECK(verify_independent(fig4_left_dompair()).independent);
    auto r = verify_independent(fig4_right_dompair());
    CHECK_FALSE(r.independent);
    REQUIRE(r.lower_witness.has_value());
    CHECK(r.lower_witness->bits() == mask_of({1, 2}));
    CHECK(r.upper_witness->bits() == mask_of({1, 2, 4, 7}));
    CHECK_FALSE(verify_independent(star_completed_dompair(9)).independent);
}

TEST_CASE("e_minus_c") {
    CHECK(e_minus_c(example1_hypergraph()) == 63);
    CHECK(e_minus_c(example2_layers().hypergraph) == 1374);
    CHECK(e_minus_c(KGraph(SetFamily(7, 3))) == 0);
}

TEST_CASE("verifiers agree with the materialised inclusion graph") {
    std::mt19937_64 rng(314159);
    const int shapes[][3] = {{5, 3, 2}, {6, 3, 2}, {6, 4, 2}, {5, 4, 3}, {6, 3, 1}, {7, 4, 3}};
    for (auto& s : shapes) {
        oracle::Bipartite g(s[0], s[1], s[2]);
        for (int trial = 0; trial < 60; ++trial) {
            const double p = 0.1 + 0.8 * unit_double(rng);
            auto d = (trial % 2 == 0) ? random_dompair(s[0], s[1], s[2], p, rng) : random_dominating(s[0], s[1], s[2], p, rng);
            auto idx = oracle_indices(g, d);
            const bool dom = g.dominates(idx);
            for (int threads : {1, 3}) {
                auto r = verify_dominating(d, threads);
                REQUIRE(r.dominating == dom);
                if (!dom) {
                    // witness is the first undominated vertex in (k-level, l-level) colex order
                    std::vector<bool> covered(g.verts.size(), false);
                    for (int c : idx)
                        for (int u : g.closed[c]) covered[u] = true;
                    // the oracle lists each level in lexicographic mask order, which is colex
                    int first = -1;
                    for (int i = 0; i < static_cast<int>(g.verts.size()) && first < 0; ++i)
                        if (!covered[i]) first = i;
                    REQUIRE(r.witness->elements() == g.verts[first]);
                }
            }
            REQUIRE(verify_independent(d).independent == g.independent(idx));
        }
    }
}

TEST_CASE("dominating + independent <=> well-covered complement (k+1,k)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = uniform_int(rng, 2, 3);
        const int n = uniform_int(rng, k + 1, 7);
        std::vector<Mask> edges;
        for (Mask m : KSubsets(n, k))
            if (unit_double(rng) < 0.5) edges.push_back(m);
        KGraph h(SetFamily(n, k, edges));
        const bool wc = is_well_covered(h).well_covered;
        if (!wc) {
            CHECK_THROWS_AS(dompair_from_wellcovered(h), PreconditionError);
            continue;
        }
        auto d = dompair_from_wellcovered(h);
        REQUIRE(verify_dominating(d).dominating);
        REQUIRE(verify_independent(d).independent);
        REQUIRE(static_cast<std::int64_t>(d.size()) ==
                static_cast<std::int64_t>(binomial(n, k)) - e_minus_c(h));
        REQUIRE(wellcovered_from_dompair(d) == h);
    }
}
