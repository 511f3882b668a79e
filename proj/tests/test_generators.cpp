#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulerext/digraph.hpp"
#include "eulerext/generators.hpp"
#include "test_oracles.hpp"

using namespace eulerext;

TEST_CASE("circulant generator: t-regular, Eulerian, validated parameters") {
    const Digraph g = cayley_circulant(6, 2);
    CHECK(g.vertex_count() == 6);
    CHECK(g.arc_count() == 12);
    CHECK(is_eulerian(g));
    for (int v = 0; v < 6; ++v) {
        CHECK(g.out_degree(v) == 2);
        CHECK(g.in_degree(v) == 2);
    }
    CHECK(g.has_arc(5, 1));  // wraps around
    CHECK_THROWS_AS(cayley_circulant(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(cayley_circulant(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(cayley_circulant(0, 1), std::invalid_argument);
}

TEST_CASE("layered gadget: size formulas and degree-1 hub vertices") {
    const Digraph g = gadget_hst(3, 2);
    CHECK(g.vertex_count() == 15);  // (s+t)*s
    CHECK(g.arc_count() == 27);     // s^2*(t+1)
    CHECK(is_eulerian(g));
    for (int u = 0; u < 9; ++u) {  // the three hub groups occupy ids 0..8
        CHECK(g.out_degree(u) == 1);
        CHECK(g.in_degree(u) == 1);
    }
    // Layer vertices: V_1 ids 9..11 receive from hubs and feed V_2.
    CHECK(g.has_arc(0, 9));    // first hub group -> first vertex of V_1
    CHECK(g.has_arc(9, 12));   // V_1 -> V_2 complete bipartite
    CHECK(g.has_arc(12, 0));   // first vertex of V_2 (= V_t) -> first hub group
    CHECK_THROWS_AS(gadget_hst(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gadget_hst(2, 0), std::invalid_argument);
}

TEST_CASE("blowup multiplies vertices by delta and arcs by delta squared") {
    const Digraph two_cycle(2, {{0, 1}, {1, 0}});
    const Digraph b = blowup({two_cycle, 2});
    CHECK(b.vertex_count() == 4);
    CHECK(b.arc_count() == 8);
    CHECK(is_eulerian(b));
    // Copies of vertex 0 are ids 0,1; copies of vertex 1 are ids 2,3.
    for (int a : {0, 1})
        for (int c : {2, 3}) {
            CHECK(b.has_arc(a, c));
            CHECK(b.has_arc(c, a));
        }
    CHECK(blowup({two_cycle, 1}) == two_cycle);
    CHECK_THROWS_AS(blowup({two_cycle, 0}), std::invalid_argument);
}

TEST_CASE("blowup preserves the Eulerian property on larger bases") {
    const Digraph b = blowup({gadget_hst(2, 4), 3});
    CHECK(b.vertex_count() == 12 * 3);
    CHECK(b.arc_count() == 20 * 9);
    CHECK(is_eulerian(b));
}

TEST_CASE("layered hub counterexample: sizes, balance, and role labels") {
    for (int t : {1, 2, 3}) {
        const DfsCounterexample cx = dfs_counterexample(t);
        const long long tt = t;
        CHECK(cx.graph.vertex_count() == 6 * tt * tt + 1);
        CHECK(cx.graph.arc_count() == tt * tt * (tt + 2) + 8 * tt * tt);
        CHECK(is_eulerian(cx.graph));
        CHECK((int)cx.roles.size() == cx.graph.vertex_count());
        CHECK(cx.roles[0] == "r");
    }
    const DfsCounterexample cx = dfs_counterexample(3);
    CHECK(cx.graph.arc_count() == 117);
    CHECK(cx.graph.vertex_count() == 55);
    CHECK(cx.roles[1] == "level:1:0");
    CHECK(cx.roles[19] == "in:1");   // companions of the first layer vertex
    CHECK(cx.roles[20] == "out:1");
    CHECK_THROWS_AS(dfs_counterexample(0), std::invalid_argument);
}

TEST_CASE("role-guided priority reorders without changing the neighbor sets") {
    const DfsCounterexample cx = dfs_counterexample(2);
    const auto priority = role_guided_priority(cx.graph, cx.roles);
    REQUIRE((int)priority.size() == cx.graph.vertex_count());
    for (int v = 0; v < cx.graph.vertex_count(); ++v) {
        std::vector<int> sorted = priority[v];
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == cx.graph.out(v));
    }
    // The hub explores the in-companion of the deepest layer first.
    const int first = priority[0].front();
    CHECK(cx.roles[first].rfind("in:", 0) == 0);
    const int host = std::stoi(cx.roles[first].substr(3));
    CHECK(cx.roles[host].rfind("level:4:", 0) == 0);  // 2t = 4 layers deep

    CHECK_THROWS_AS(role_guided_priority(cx.graph, {}), std::invalid_argument);
    auto bad = cx.roles;
    bad[3] = "mystery";
    CHECK_THROWS_AS(role_guided_priority(cx.graph, bad), std::invalid_argument);
}

TEST_CASE("random Eulerian generator is deterministic and balanced") {
    const Digraph a = random_eulerian(8, 20, 7);
    const Digraph b = random_eulerian(8, 20, 7);
    CHECK(a == b);
    CHECK(is_eulerian(a));
    CHECK(a.arc_count() >= 2);
    CHECK(a.arc_count() <= 20);
    CHECK(random_eulerian(8, 20, 8) != random_eulerian(8, 20, 9));

    CHECK(random_eulerian(5, 0, 1).arc_count() == 0);
    CHECK_THROWS_AS(random_eulerian(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_eulerian(3, 7, 1), std::invalid_argument);  // > n(n-1)
}
