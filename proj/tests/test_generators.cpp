#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "ont/canon.hpp"
#include "ont/exact.hpp"
#include "ont/generators.hpp"
#include "ont/io.hpp"
#include "oracles.hpp"

using namespace ont;

TEST_CASE("random_near_triangulation basics") {
    CHECK(random_near_triangulation(3, 1, 0.5).vertex_count() == 3);

    // bias 1: stacked triangulation, outer cycle stays a triangle
    PlaneGraph stacked = random_near_triangulation(12, 2, 1.0);
    CHECK(stacked.outer_cycle().size() == 3);
    CHECK(is_near_triangulation(stacked).near_triangulation);

    // bias 0: ears only, maximal outerplanar
    PlaneGraph outer = random_near_triangulation(12, 3, 0.0);
    CHECK(outer.outer_cycle().size() == 12);
    CHECK(is_near_triangulation(outer).near_triangulation);
}

TEST_CASE("generation is deterministic in (n, seed, bias)") {
    for (double bias : {0.0, 0.3, 0.7, 1.0}) {
        PlaneGraph a = random_near_triangulation(20, 99, bias);
        PlaneGraph b = random_near_triangulation(20, 99, bias);
        std::ostringstream sa, sb;
        write_pg(sa, a);
        write_pg(sb, b);
        CHECK(sa.str() == sb.str());
    }
    CHECK(is_near_triangulation(random_near_triangulation(30, 123, 0.5)).near_triangulation);
}

TEST_CASE("random_maximal_outerplanar(4) is K4 minus an edge") {
    PlaneGraph g = random_maximal_outerplanar(4, 7);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);
    CHECK(g.outer_cycle().size() == 4);
}

TEST_CASE("two seeds at n=6 both validate; the fan flag gives the fan") {
    PlaneGraph a = random_maximal_outerplanar(6, 1);
    PlaneGraph b = random_maximal_outerplanar(6, 2);
    CHECK(is_near_triangulation(a).near_triangulation);
    CHECK(is_near_triangulation(b).near_triangulation);

    PlaneGraph fan = random_maximal_outerplanar(8, 0, true);
    int max_deg = 0;
    for (VertexId v = 0; v < 8; ++v) max_deg = std::max(max_deg, fan.degree(v));
    CHECK(max_deg == 7);  // the hub sees everyone
    CHECK(is_near_triangulation(fan).near_triangulation);
}

TEST_CASE("snake structure") {
    PlaneGraph s = snake(8);
    CHECK(s.vertex_count() == 8);
    CHECK(s.edge_count() == 2 * 8 - 3);
    CHECK(is_near_triangulation(s).near_triangulation);
    CHECK(s.outer_cycle().size() == 8);
    // edges are exactly i-(i+1) and i-(i+2)
    for (int i = 0; i + 1 < 8; ++i) CHECK(s.has_edge(i, i + 1));
    for (int i = 0; i + 2 < 8; ++i) CHECK(s.has_edge(i, i + 2));
}

TEST_CASE("tight family attains ceil(n/2) for small n") {
    for (int n : {5, 8}) {
        PlaneGraph g = tight_family(n);
        ExactResult r = oriented_diameter_exact(g);
        CHECK(r.value == half_ceil(n));
    }
}

TEST_CASE("enumerate: counts at tiny n") {
    CHECK(enumerate_near_triangulations(3).size() == 1);
    auto n4 = enumerate_near_triangulations(4);
    CHECK(n4.size() == 2);  // K4- and K4
    std::set<int> sizes;
    for (const auto& g : n4) sizes.insert(g.edge_count());
    CHECK(sizes == std::set<int>{5, 6});
}

TEST_CASE("enumerate outputs validate and are pairwise non-isomorphic") {
    for (int n = 3; n <= 7; ++n) {
        auto all = enumerate_near_triangulations(n);
        std::set<std::string> canon;
        for (const auto& g : all) {
            CHECK(is_near_triangulation(g).near_triangulation);
            CHECK(g.vertex_count() == n);
            canon.insert(canonical_form(g));
        }
        CHECK(canon.size() == all.size());
    }
}

TEST_CASE("every triangulated disk keeps a chord-free outer vertex") {
    // the reverse move behind the enumeration's completeness argument
    for (int n = 4; n <= 7; ++n) {
        for (const auto& g : enumerate_near_triangulations(n)) {
            auto cyc = g.outer_cycle();
            std::set<VertexId> outer(cyc.begin(), cyc.end());
            bool found = false;
            for (VertexId v : cyc) {
                bool chordfree = true;
                size_t on_cycle = 0;
                for (VertexId w : g.rotation(v))
                    if (outer.count(w)) ++on_cycle;
                // outer neighbors beyond the two cycle neighbors are chords
                chordfree = (on_cycle == 2);
                if (chordfree) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("enumeration matches the independent disk-embedding oracle up to n=6") {
    for (int n = 4; n <= 6; ++n) {
        CAPTURE(n);
        // oracle side: all labeled graphs on n vertices that admit an embedding
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
        const int mm = static_cast<int>(all_edges.size());
        std::set<std::string> oracle_set;
        for (uint64_t mask = 0; mask < (1ull << mm); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < mm; ++e)
                if ((mask >> e) & 1) edges.push_back(all_edges[e]);
            if (oracle::admits_near_triangulation(n, edges)) oracle_set.insert(oracle::brute_canon(n, edges));
        }
        // library side
        std::set<std::string> enum_set;
        for (const auto& g : enumerate_near_triangulations(n)) enum_set.insert(oracle::brute_canon(n, g.edges()));
        CHECK(enum_set == oracle_set);
    }
}

TEST_CASE("the octahedron shows up at n=6") {
    // 4-regular on 6 vertices; unreachable by ear/stack moves alone
    bool found = false;
    for (const auto& g : enumerate_near_triangulations(6)) {
        bool regular4 = true;
        for (VertexId v = 0; v < 6; ++v)
            if (g.degree(v) != 4) regular4 = false;
        if (regular4) found = true;
    }
    CHECK(found);
}
