#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "srd/exact_solver.hpp"
#include "srd/formulas.hpp"
#include "srd/graph.hpp"

using namespace srd;
using testutil::labeling_of;

// Values frozen from an independent brute-force enumeration.
namespace {
const int kPathGamma[] = {1, 1, 2, 2, 3, 4, 4, 5};        // n = 1..8
const int kCycleGamma[] = {2, 3, 4, 4, 5, 6};             // n = 3..8
const int kCompleteGamma[] = {1, 1, 2, 1, 1, 1};          // n = 1..6
const int kLadderGamma[] = {3, 3, 4, 4, 5, 5};            // n = 2..7
const int kCircularGamma[] = {3, 2, 4, 4, 5};             // n = 3..7 (true values)
const int kLadderCompGamma[] = {2, 3, 2, 2, 2, 2};        // n = 2..7
const int kCircularCompGamma[] = {4, 4, 3, 2, 3};         // n = 3..7 (true values)
} // namespace

TEST_CASE("exhaustive matches the frozen brute-force values on small families") {
    for (int n = 1; n <= 6; ++n)
        CHECK(solve_exhaustive(path(n)).weight == kPathGamma[n - 1]);
    for (int n = 3; n <= 7; ++n)
        CHECK(solve_exhaustive(cycle(n)).weight == kCycleGamma[n - 3]);
    for (int n = 1; n <= 6; ++n)
        CHECK(solve_exhaustive(complete(n)).weight == kCompleteGamma[n - 1]);
    for (int n = 2; n <= 5; ++n)
        CHECK(solve_exhaustive(family_graph({Family::ladder, n})).weight == kLadderGamma[n - 2]);
    for (int n = 3; n <= 5; ++n)
        CHECK(solve_exhaustive(family_graph({Family::circular_ladder, n})).weight ==
              kCircularGamma[n - 3]);
    for (int n = 2; n <= 5; ++n)
        CHECK(solve_exhaustive(family_graph({Family::ladder_complement, n})).weight ==
              kLadderCompGamma[n - 2]);
    for (int n = 3; n <= 5; ++n)
        CHECK(solve_exhaustive(family_graph({Family::circular_ladder_complement, n})).weight ==
              kCircularCompGamma[n - 3]);
}

TEST_CASE("gamma_SR(P_1) is 1, not floor(2/3)") {
    // Single vertex: -1 violates both conditions, so +1 is forced.
    CHECK(solve_exhaustive(path(1)).weight == 1);
    CHECK(solve_branch_bound(path(1)).weight == 1);
}

TEST_CASE("the empty graph is the only tested graph with gamma = n") {
    for (int k = 1; k <= 5; ++k) {
        const Graph empty = complement(complete(k));
        const Certificate c = solve_exhaustive(empty);
        CHECK(c.weight == k);
        CHECK(c.labeling == Labeling::all_plus_one(k));
    }
    CHECK(solve_exhaustive(path(4)).weight < 4);
    CHECK(solve_exhaustive(cycle(5)).weight < 5);
}

TEST_CASE("exhaustive returns the lexicographically smallest optimal witness") {
    const Certificate c = solve_exhaustive(path(3));
    CHECK(c.weight == 2);
    CHECK(c.labeling == labeling_of({-1, 2, 1}));
    const Certificate k2 = solve_exhaustive(complete(2));
    CHECK(k2.weight == 1);
    CHECK(k2.labeling == labeling_of({-1, 2}));
}

TEST_CASE("certificates re-validate") {
    for (const Graph& g : {path(6), cycle(6), family_graph({Family::ladder, 4}),
                           family_graph({Family::circular_ladder_complement, 4})}) {
        for (const Certificate& c : {solve_exhaustive(g), solve_branch_bound(g)}) {
            CHECK(is_valid_srdf(g, c.labeling));
            CHECK(weight(c.labeling) == c.weight);
            CHECK(c.claimed_optimal);
            CHECK(c.stats.nodes > 0);
        }
    }
}

TEST_CASE("branch and bound equals exhaustive on the family corpus") {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 7; ++n) corpus.push_back(path(n));
    for (int n = 3; n <= 7; ++n) corpus.push_back(cycle(n));
    for (int n = 1; n <= 6; ++n) corpus.push_back(complete(n));
    for (int n = 2; n <= 6; ++n) corpus.push_back(family_graph({Family::ladder, n}));
    for (int n = 3; n <= 6; ++n) corpus.push_back(family_graph({Family::circular_ladder, n}));
    for (int n = 2; n <= 6; ++n) corpus.push_back(family_graph({Family::ladder_complement, n}));
    for (int n = 3; n <= 6; ++n)
        corpus.push_back(family_graph({Family::circular_ladder_complement, n}));
    for (const Graph& g : corpus) {
        CAPTURE(graph_description(g));
        CHECK(solve_branch_bound(g).weight == solve_exhaustive(g).weight);
    }
}

TEST_CASE("branch and bound equals exhaustive on random graphs") {
    std::mt19937 rng(20240601);
    for (int i = 0; i < 25; ++i) {
        const int n = 6 + i % 4;
        const Graph g = testutil::random_graph(rng, n, 0.35 + 0.05 * (i % 5), false);
        CAPTURE(i, to_edge_list_string(g));
        const Certificate bb = solve_branch_bound(g);
        const Certificate ex = solve_exhaustive(g);
        CHECK(bb.weight == ex.weight);
        CHECK(is_valid_srdf(g, bb.labeling));
        CHECK(is_valid_srdf(g, ex.labeling));
    }
}

TEST_CASE("spec'd branch-and-bound examples") {
    CHECK(solve_branch_bound(family_graph({Family::ladder, 6})).weight == 5);
    CHECK(solve_branch_bound(family_graph({Family::circular_ladder, 5})).weight == 4);
    CHECK(solve_branch_bound(family_graph({Family::ladder_complement, 4})).weight == 2);
}

TEST_CASE("branch and bound is deterministic and scheduling independent") {
    const Graph g = family_graph({Family::circular_ladder, 5});
    const Certificate a = solve_branch_bound(g);
    const Certificate b = solve_branch_bound(g);
    CHECK(a.weight == b.weight);
    CHECK(a.labeling == b.labeling);

    BranchBoundOptions parallel;
    parallel.workers = 3;
    for (const Graph& h : {g, family_graph({Family::ladder, 5}), cycle(8),
                           family_graph({Family::ladder_complement, 5})}) {
        const Certificate p = solve_branch_bound(h, parallel);
        CHECK(p.weight == solve_branch_bound(h).weight);
        CHECK(is_valid_srdf(h, p.labeling));
    }
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(solve_exhaustive(complete(17)), SizeLimitError);
    CHECK_THROWS_AS(solve_branch_bound(complete(41)), SizeLimitError);
    ExhaustiveOptions small;
    small.max_vertices = 4;
    CHECK_THROWS_AS(solve_exhaustive(path(5), small), SizeLimitError);
    CHECK_NOTHROW(solve_exhaustive(path(4), small));
}

TEST_CASE("optimum sits between the general bounds and the vertex count") {
    std::mt19937 rng(555);
    std::vector<Graph> corpus = {path(5), cycle(7), complete(5),
                                 family_graph({Family::ladder, 5}),
                                 family_graph({Family::circular_ladder, 4})};
    for (int i = 0; i < 10; ++i) corpus.push_back(testutil::random_graph(rng, 8, 0.4, false));
    for (const Graph& g : corpus) {
        const int opt = solve_branch_bound(g).weight;
        CHECK(opt <= g.vertex_count());
        CHECK(Rational(opt) >= lower_bound_degree(g));
        if (auto sb = lower_bound_size(g)) CHECK(Rational(opt) >= *sb);
    }
}
