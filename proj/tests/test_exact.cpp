#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ont/canon.hpp"
#include "ont/exact.hpp"
#include "ont/generators.hpp"
#include "oracles.hpp"

using namespace ont;

namespace {

PlaneGraph k4() { return PlaneGraph::build({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, {0, 1, 2}); }

PlaneGraph w5() {
    // hub 5 inside the pentagon 0..4
    return PlaneGraph::build(
        {{1, 5, 4}, {2, 5, 0}, {3, 5, 1}, {4, 5, 2}, {0, 5, 3}, {0, 1, 2, 3, 4}},
        {0, 1, 2, 3, 4});
}

// K4 on {0,1,2,h=3} with a two-vertex flap 4,5 on the outer edge 1-2
PlaneGraph g63() {
    return PlaneGraph::build(
        {{1, 3, 2}, {2, 3, 0, 4}, {0, 3, 1, 5, 4}, {0, 1, 2}, {1, 2, 5}, {4, 2}},
        {0, 1, 4, 5, 2});
}

} // namespace

TEST_CASE("triangle: the only strong orientations are the two directed triangles") {
    PlaneGraph t = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
    ExactResult r = oriented_diameter_exact(t);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.value == 2);
    CHECK(oracle::brute_oriented_diameter(t) == 2);
}

TEST_CASE("K4 has oriented diameter 3 = n/2 + 1") {
    ExactResult r = oriented_diameter_exact(k4());
    CHECK(r.value == 3);
    CHECK(diameter(r.witness) == 3);
}

TEST_CASE("W5 has oriented diameter 4, confirmed exhaustively") {
    ExactResult r = oriented_diameter_exact(w5());
    CHECK(r.value == 4);
    CHECK(oracle::brute_oriented_diameter(w5()) == 4);
}

TEST_CASE("G6_3 has oriented diameter 4 = n/2 + 1") {
    PlaneGraph g = g63();
    REQUIRE(is_near_triangulation(g).near_triangulation);
    ExactResult r = oriented_diameter_exact(g);
    CHECK(r.value == 4);
    CHECK(oracle::brute_oriented_diameter(g) == 4);
}

TEST_CASE("solver agrees with the exhaustive oracle on every class up to n=6") {
    for (int n = 3; n <= 6; ++n) {
        for (const PlaneGraph& g : enumerate_near_triangulations(n)) {
            ExactResult r = oriented_diameter_exact(g);
            auto expect = oracle::brute_oriented_diameter(g);
            REQUIRE(expect.has_value());
            CHECK(r.value == expect);
            CHECK(diameter(r.witness) == r.value);
            CHECK(r.witness.covers_exactly(g));
        }
    }
}

TEST_CASE("solver agrees with the oracle on random 7-vertex instances") {
    for (uint64_t seed : {1, 2, 3, 4, 5, 6}) {
        PlaneGraph g = random_near_triangulation(7, seed, 0.5);
        CHECK(oriented_diameter_exact(g).value == oracle::brute_oriented_diameter(g));
    }
}

TEST_CASE("anchored search: Lemma-5 values on K4 minus an edge") {
    PlaneGraph km = PlaneGraph::build({{1, 3, 2}, {2, 0}, {0, 1, 3}, {2, 0}}, {1, 0, 3, 2});
    REQUIRE(km.edge_count() == 5);
    // anchor at a degree-3 vertex with bound 2: optimal diameter is still 3
    VertexId v3 = -1;
    for (VertexId v = 0; v < 4; ++v)
        if (km.degree(v) == 3) v3 = v;
    REQUIRE(v3 >= 0);
    ExactResult r = anchored_exact(km, v3, 2);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.value == 3);
    CHECK(anchored_ecc(r.witness, v3) <= 2);
    CHECK(oracle::brute_oriented_diameter(km, v3, 2) == 3);
}

TEST_CASE("anchored search on a triangle") {
    PlaneGraph t = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
    ExactResult r = anchored_exact(t, 0, 2);
    CHECK(r.value == 2);
}

TEST_CASE("anchored search matches Lemma 6 on K4") {
    // anchor: any vertex of degree 3 with an interior neighbor
    ExactResult r = anchored_exact(k4(), 0, 2);
    CHECK(r.value == 3);
    CHECK(anchored_ecc(r.witness, 0) == 2);
    // and bound n/2 - 1 = 1 is infeasible
    ExactResult r2 = anchored_exact(k4(), 0, 1);
    CHECK(r2.status == SolveStatus::Infeasible);
}

TEST_CASE("bridges are rejected") {
    std::vector<std::vector<VertexId>> path = {{1}, {0, 2}, {1}};
    CHECK_THROWS_AS(oriented_diameter_exact(path), Error);
    CHECK(has_bridge(path));
}

TEST_CASE("a tiny node budget reports exhaustion") {
    PlaneGraph g = snake(12);
    ExactOptions opts;
    opts.budget.max_nodes = 16;
    ExactResult r = oriented_diameter_exact(g, opts);
    CHECK(r.status == SolveStatus::BudgetExhausted);
    CHECK_FALSE(r.complete);
}

TEST_CASE("parallel subtree search returns the sequential value") {
    for (uint64_t seed : {3, 9, 27}) {
        PlaneGraph g = random_near_triangulation(9, seed, 0.3);
        ExactOptions seq, par;
        par.parallel = true;
        ExactResult a = oriented_diameter_exact(g, seq);
        ExactResult b = oriented_diameter_exact(g, par);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("incumbent_limit turns the solver into a lower-bound prover") {
    PlaneGraph g = snake(9);
    ExactResult full = oriented_diameter_exact(g);
    REQUIRE(full.value.has_value());
    ExactOptions below;
    below.incumbent_limit = *full.value;  // search strictly below the optimum
    ExactResult r = oriented_diameter_exact(g, below);
    CHECK(r.status == SolveStatus::Infeasible);
    CHECK(r.complete);
}

TEST_CASE("census restricted to n=4 lists exactly K4- and K4") {
    auto rows = census(4);
    int exceptions = 0;
    for (const auto& r : rows)
        if (r.exception) ++exceptions;
    CHECK(exceptions == 2);
    auto rows3 = census(3);
    for (const auto& r : rows3) CHECK_FALSE(r.exception);
}

TEST_CASE("witness re-verification across a census level") {
    for (const auto& row : census(6)) {
        if (row.oriented_diameter < 0) continue;
        CHECK(diameter(row.witness) == row.oriented_diameter);
        CHECK(row.witness.covers_exactly(row.graph));
        CHECK(row.oriented_diameter >= undirected_diameter(row.graph));
    }
}
