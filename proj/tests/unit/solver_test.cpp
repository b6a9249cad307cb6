#include <doctest.h>

#include <random>

#include "incdom/bounds.hpp"
#include "incdom/constructions.hpp"
#include "incdom/hypergraph.hpp"
#include "incdom/random.hpp"
#include "incdom/solver.hpp"
#include "oracles.hpp"

using namespace incdom;

namespace {

void check_witness(const SolveResult& r, SolveMode mode) {
    REQUIRE(r.witness.size() == r.size);
    REQUIRE(verify_dominating(r.witness).dominating);
    if (mode == SolveMode::Independent) REQUIRE(verify_independent(r.witness).independent);
    if (r.status == SolveStatus::Optimal) REQUIRE(r.lower_bound == r.size);
    REQUIRE(r.lower_bound <= r.size);
}

}  // namespace

TEST_CASE("solve (5,3,2) matches exhaustive search over all 6-subsets") {
    // every 5-subset of the 20 vertices fails, some 6-subset succeeds
    oracle::Bipartite g(5, 3, 2);
    CHECK(g.minimum(false) == 6);
    CHECK(g.minimum(true) == 6);
    for (auto mode : {SolveMode::Gamma, SolveMode::Independent}) {
        auto r = solve(5, 3, 2, mode);
        CHECK(r.status == SolveStatus::Optimal);
        CHECK(r.size == 6);
        check_witness(r, mode);
    }
}

TEST_CASE("solve agrees with brute force on tiny inclusion graphs") {
    const int shapes[][3] = {{4, 2, 1}, {5, 2, 1}, {4, 3, 2}, {4, 3, 1}, {5, 4, 3}, {5, 4, 2}, {6, 5, 4}, {5, 3, 1}};
    for (auto& s : shapes) {
        oracle::Bipartite g(s[0], s[1], s[2]);
        for (auto mode : {SolveMode::Gamma, SolveMode::Independent}) {
            auto r = solve(s[0], s[1], s[2], mode);
            CAPTURE(s[0]);
            CAPTURE(s[1]);
            CAPTURE(s[2]);
            REQUIRE(r.status == SolveStatus::Optimal);
            REQUIRE(static_cast<int>(r.size) == g.minimum(mode == SolveMode::Independent));
            check_witness(r, mode);
        }
    }
}

TEST_CASE("solve (n,3,2) equals the closed form for n = 5, 6, 7") {
    for (int n = 5; n <= 7; ++n)
        for (auto mode : {SolveMode::Gamma, SolveMode::Independent}) {
            auto r = solve(n, 3, 2, mode);
            CHECK(r.status == SolveStatus::Optimal);
            CHECK(static_cast<std::int64_t>(r.size) == bounds::gamma32(n));
            check_witness(r, mode);
        }
}

TEST_CASE("solve: gamma <= i on small shapes") {
    for (auto [n, l, k] : {std::tuple{6, 4, 2}, {6, 4, 3}, {7, 4, 3}, {6, 5, 2}}) {
        auto g = solve(n, l, k, SolveMode::Gamma);
        auto i = solve(n, l, k, SolveMode::Independent);
        CHECK(g.size <= i.size);
    }
}

TEST_CASE("solve: relabelling and warm starts do not change the optimum") {
    std::mt19937_64 rng(2718);
    const auto base = solve(7, 3, 2, SolveMode::Gamma).size;
    for (int trial = 0; trial < 3; ++trial) {
        SolveOptions opt;
        opt.ground_permutation = random_permutation(7, rng);
        CHECK(solve(7, 3, 2, SolveMode::Gamma, opt).size == base);
    }
    SolveOptions warm;
    warm.warm_starts.push_back(star_completed_dompair(9));
    auto a = solve(9, 3, 2, SolveMode::Gamma, SolveOptions{.budget_seconds = 0.0});
    auto b = solve(9, 3, 2, SolveMode::Gamma, SolveOptions{.budget_seconds = 0.0, .warm_starts = warm.warm_starts});
    CHECK(b.size == 24);
    CHECK(b.size <= a.size);

    SolveOptions bad;
    bad.warm_starts.push_back(DomPair(7, 3, 2));
    CHECK_THROWS_AS(solve(7, 3, 2, SolveMode::Gamma, bad), std::invalid_argument);
}

TEST_CASE("solve: budget exhaustion keeps a valid incumbent") {
    auto r = solve(9, 4, 2, SolveMode::Gamma, SolveOptions{.budget_seconds = 0.0});
    CHECK(r.status == SolveStatus::UpperBoundOnly);
    check_witness(r, SolveMode::Gamma);
    CHECK(r.lower_bound <= 15);
    CHECK(r.size >= 15);
}

TEST_CASE("solve: argument checks") {
    CHECK_THROWS_AS(solve(50, 4, 3, SolveMode::Gamma), std::invalid_argument);
    CHECK_THROWS_AS(solve(5, 2, 3, SolveMode::Gamma), std::invalid_argument);
    CHECK_THROWS_AS(solve(5, 3, 2, SolveMode::Gamma, SolveOptions{.ground_permutation = {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("enumerate_optimal_32") {
    auto all = enumerate_optimal_32(5);
    REQUIRE(!all.empty());
    // independent brute force: count 6-subsets of the 20 vertices that dominate
    oracle::Bipartite g(5, 3, 2);
    std::size_t count = 0;
    for (std::uint64_t m : KSubsets(20, 6)) {
        std::vector<int> pick;
        for (int i = 0; i < 20; ++i)
            if ((m >> i) & 1) pick.push_back(i);
        count += g.dominates(pick);
    }
    CHECK(all.size() == count);
    for (auto& d : all) {
        CHECK(d.size() == 6);
        CHECK(verify_dominating(d).dominating);
    }
    CHECK_THROWS_AS(enumerate_optimal_32(7), std::invalid_argument);
}

TEST_CASE("extremal_graphs_32") {
    CHECK(extremal_graphs_32(5).size() == 5);
    CHECK(extremal_graphs_32(8).size() == 1);
    CHECK(extremal_graphs_32(9).size() == 4);
    for (int n = 5; n <= 12; ++n)
        for (auto& [name, g] : extremal_graphs_32(n)) CHECK(f_times_2(g) == 2 * bounds::lemma2_rhs(n));
    CHECK(classify_extremal_32(k_plus(5, 9)) == "K+_{5,4}");
    CHECK(classify_extremal_32(small_graph(SmallGraph::H9)) == "H9");
    CHECK_FALSE(classify_extremal_32(Graph(9)).has_value());
}

TEST_CASE("sample_optimal_32") {
    auto s = sample_optimal_32(6, 5, 17);
    CHECK(!s.empty());
    for (auto& d : s) {
        CHECK(static_cast<std::int64_t>(d.size()) == bounds::gamma32(6));
        CHECK(isomorphic(graph_from_dompair(d), k_plus(4, 6)));
    }
    CHECK_THROWS_AS(sample_optimal_32(10, 1, 1), std::invalid_argument);
}

TEST_CASE("exhaustive_graphs_f") {
    for (int n = 3; n <= 6; ++n) {
        auto r = exhaustive_graphs_f(n);
        CHECK(r.max_f_times_2 == 2 * bounds::lemma2_rhs(n));
        CHECK(r.equality_clause_holds);
        CHECK(!r.maximizers.empty());
        for (auto& g : r.maximizers) CHECK(f_times_2(g) == r.max_f_times_2);
    }
    CHECK_THROWS_AS(exhaustive_graphs_f(8), std::invalid_argument);
}

TEST_CASE("to_string") {
    CHECK(std::string(to_string(SolveMode::Gamma)) == "gamma");
    CHECK(std::string(to_string(SolveMode::Independent)) == "i");
    CHECK(std::string(to_string(SolveStatus::Optimal)) == "optimal");
    CHECK(std::string(to_string(SolveStatus::UpperBoundOnly)) == "upper_bound_only");
}
