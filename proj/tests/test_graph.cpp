#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "bigcycle/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bigcycle;
using namespace bigcycle::testutil;

TEST_CASE("two_coloring on K3,3 splits the sides") {
    MultiGraph g = k33();
    auto sides = two_coloring(g);
    REQUIRE(sides);
    for (int v = 0; v < 3; ++v) CHECK((*sides)[v] == 0);
    for (int v = 3; v < 6; ++v) CHECK((*sides)[v] == 1);
}

TEST_CASE("two_coloring rejects a triangle with an odd witness") {
    MultiGraph g = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    std::vector<VertexId> witness;
    auto sides = two_coloring(g, &witness);
    CHECK(!sides);
    CHECK(!witness.empty());
}

TEST_CASE("two_coloring on Q3 matches bit parity") {
    MultiGraph g = q3();
    auto sides = two_coloring(g);
    REQUIRE(sides);
    // Independent oracle: parity of set bits must separate every edge.
    for (EdgeId e : g.edges()) {
        int pu = __builtin_popcount((unsigned)g.edge_u(e)) % 2;
        int pv = __builtin_popcount((unsigned)g.edge_v(e)) % 2;
        CHECK(pu != pv);
        CHECK((*sides)[g.edge_u(e)] != (*sides)[g.edge_v(e)]);
    }
    // And the BFS coloring equals parity up to a flip per component.
    int flip = (*sides)[0];
    for (VertexId v : g.vertices())
        CHECK((*sides)[v] == ((__builtin_popcount((unsigned)v) % 2) ^ flip));
}

TEST_CASE("is_cubic") {
    CHECK(is_cubic(k33()));
    MultiGraph doubled = from_pairs(2, {{0, 1}, {0, 1}});
    CHECK(!is_cubic(doubled));
    // Doubled edge plus one stub each: degree 3 at the pair.
    MultiGraph frag = from_pairs(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}});
    CHECK(frag.degree(0) == 3);
    CHECK(frag.degree(1) == 3);
    CHECK(!is_cubic(frag));  // the stub endpoints have degree 1
}

TEST_CASE("connected_components") {
    CHECK(connected_components(k33()).size() == 1);
    MultiGraph two;
    for (int i = 0; i < 12; ++i) two.add_vertex();
    for (int rep = 0; rep < 2; ++rep)
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) two.add_edge(6 * rep + u, 6 * rep + v, true);
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 6);
    CHECK(comps[1].size() == 6);
    CHECK(comps[0][0] == 0);
    CHECK(comps[1][0] == 6);
    CHECK(count_k33_components(two) == 2);
    MultiGraph empty;
    CHECK(connected_components(empty).empty());
}

TEST_CASE("cycle_decomposition of a Hamiltonian 6-cycle in K3,3") {
    MultiGraph g = k33();
    EdgeSet f;
    // 0-3, 3-1, 1-4, 4-2, 2-5, 5-0.
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}})
        f.insert(g.edges_between(u, v).at(0));
    auto cycles = cycle_decomposition(g, f);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 6);
    CHECK(cycles[0].vertices[0] == 0);
}

TEST_CASE("cycle_decomposition of two 4-cycles") {
    MultiGraph g = from_pairs(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    EdgeSet f;
    for (EdgeId e : g.edges()) f.insert(e);
    auto cycles = cycle_decomposition(g, f);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].length() == 4);
    CHECK(cycles[1].length() == 4);
}

TEST_CASE("cycle_decomposition of a doubled edge is a 2-cycle") {
    MultiGraph g = from_pairs(2, {{0, 1}, {0, 1}});
    EdgeSet f;
    f.insert(0);
    f.insert(1);
    auto cycles = cycle_decomposition(g, f);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 2);
}

namespace {

// Independent walk-tracing oracle: follows the 2-regular subgraph greedily
// and reports sorted cycle lengths.
std::vector<int> trace_cycle_lengths(const MultiGraph& g, const EdgeSet& f) {
    std::set<EdgeId> left;
    for (EdgeId e : g.edges())
        if (f.contains(e)) left.insert(e);
    std::vector<int> lens;
    while (!left.empty()) {
        EdgeId start = *left.begin();
        VertexId anchor = g.edge_u(start), cur = g.edge_v(start);
        left.erase(start);
        int len = 1;
        EdgeId prev = start;
        while (cur != anchor) {
            for (EdgeId e : g.incident(cur))
                if (e != prev && left.count(e)) {
                    left.erase(e);
                    prev = e;
                    cur = g.other_end(e, cur);
                    ++len;
                    break;
                }
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace

TEST_CASE("cycle_decomposition agrees with the walk-tracing oracle on Q3") {
    MultiGraph g = q3();
    // Complement of the perfect matching pairing v with v^4.
    EdgeSet f;
    for (EdgeId e : g.edges())
        if ((g.edge_u(e) ^ g.edge_v(e)) != 4) f.insert(e);
    auto cycles = cycle_decomposition(g, f);
    std::vector<int> lens;
    for (const Cycle& c : cycles) lens.push_back(c.length());
    std::sort(lens.begin(), lens.end());
    CHECK(lens == trace_cycle_lengths(g, f));
    int total = 0;
    for (int l : lens) total += l;
    CHECK(total == 8);
}

TEST_CASE("cycle_decomposition rejects non-2-regular input") {
    MultiGraph g = k33();
    EdgeSet f;
    f.insert(0);
    CHECK_THROWS_AS(cycle_decomposition(g, f), NotTwoRegularError);
}

TEST_CASE("cycle_decomposition output partitions f exactly") {
    MultiGraph g = q3();
    EdgeSet f;
    for (EdgeId e : g.edges())
        if ((g.edge_u(e) ^ g.edge_v(e)) != 1) f.insert(e);
    auto cycles = cycle_decomposition(g, f);
    std::set<EdgeId> seen;
    std::set<VertexId> vseen;
    for (const Cycle& c : cycles) {
        for (EdgeId e : c.edges) {
            CHECK(f.contains(e));
            CHECK(!seen.count(e));
            seen.insert(e);
        }
        for (VertexId v : c.vertices) {
            CHECK(!vseen.count(v));
            vseen.insert(v);
        }
    }
    CHECK((int)seen.size() == f.count);
}

TEST_CASE("identical graphs give identical decompositions") {
    for (int rep = 0; rep < 2; ++rep) {
        MultiGraph g = q3();
        EdgeSet f;
        for (EdgeId e : g.edges())
            if ((g.edge_u(e) ^ g.edge_v(e)) != 2) f.insert(e);
        auto cycles = cycle_decomposition(g, f);
        static std::vector<std::vector<VertexId>> first_run;
        std::vector<std::vector<VertexId>> run;
        for (const Cycle& c : cycles) run.push_back(c.vertices);
        if (rep == 0)
            first_run = run;
        else
            CHECK(run == first_run);
    }
}

TEST_CASE("self-loops are rejected") {
    MultiGraph g;
    g.add_vertex();
    CHECK_THROWS_AS(g.add_edge(0, 0), InputInvalidError);
}

TEST_CASE("id slots survive removal and reinstatement") {
    MultiGraph g = k33();
    EdgeId e = g.edges_between(0, 3).at(0);
    g.remove_edge(e);
    CHECK(!g.edge_alive(e));
    g.add_edge_at(e, 0, 3, true);
    CHECK(g.edge_alive(e));
    CHECK(g.edge_organic(e));
}
