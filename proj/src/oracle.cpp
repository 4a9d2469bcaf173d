#include "bigcycle/oracle.hpp"

#include <algorithm>

namespace bigcycle {

void enumerate_perfect_matchings(const MultiGraph& g,
                                 const std::function<void(const Matching&)>& visit) {
    if (g.num_vertices() > 40) throw BudgetExceededError("oracle budget is 40 vertices");
    std::vector<VertexId> verts = g.vertices();
    std::vector<char> covered(g.vertex_capacity(), 0);
    Matching current;

    auto rec = [&](auto&& self, size_t i) -> void {
        while (i < verts.size() && covered[verts[i]]) ++i;
        if (i == verts.size()) {
            Matching sorted = current;
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
            return;
        }
        VertexId v = verts[i];
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            current.push_back(e);
            self(self, i + 1);
            current.pop_back();
            covered[v] = covered[w] = 0;
        }
    };
    rec(rec, 0);
}

OracleReport min_cycles_two_factor(const MultiGraph& g) {
    OracleReport rep;
    rep.min_cycles = -1;
    enumerate_perfect_matchings(g, [&](const Matching& m) {
        ++rep.matchings_enumerated;
        EdgeSet f;
        f.ensure(g.edge_capacity());
        for (EdgeId e : g.edges()) f.insert(e);
        for (EdgeId e : m) f.erase(e);
        int cycles = (int)cycle_decomposition(g, f).size();
        if (rep.min_cycles < 0 || cycles < rep.min_cycles) {
            rep.min_cycles = cycles;
            rep.optimal_two_factor.clear();
            for (EdgeId e : g.edges())
                if (f.contains(e)) rep.optimal_two_factor.push_back(e);
        }
    });
    if (rep.min_cycles < 0) throw Error("graph has no perfect matching");
    return rep;
}

Violation validate_two_factor(const MultiGraph& g, const EdgeSet& f) {
    for (VertexId v : g.vertices()) {
        int d = 0;
        for (EdgeId e : g.incident(v))
            if (f.contains(e)) ++d;
        if (d != 2)
            return {false, "vertex " + std::to_string(v) + " has 2-factor degree " +
                               std::to_string(d)};
    }
    return {};
}

Violation validate_eulerian(const MultiGraph& g0, const EulerianResult& res) {
    // (a) edges exist with multiplicity at most 2
    long long count = 0;
    for (EdgeId e = 0; e < (int)res.multiplicity.size(); ++e) {
        int m = res.multiplicity[e];
        if (m == 0) continue;
        if (m < 0 || m > 2) return {false, "(a) multiplicity out of range"};
        if (!g0.edge_alive(e)) return {false, "(a) multiset edge not in the graph"};
        count += m;
    }
    if (count != res.edge_count) return {false, "(d) edge_count inconsistent with multiset"};
    // (b) even degrees, nonzero at every vertex
    for (VertexId v : g0.vertices()) {
        int d = 0;
        for (EdgeId e : g0.incident(v)) d += res.multiplicity[e];
        if (d == 0) return {false, "(c) multiset does not span vertex " + std::to_string(v)};
        if (d % 2 != 0) return {false, "(b) odd degree at vertex " + std::to_string(v)};
    }
    // (c) connected over the support
    std::vector<char> seen(g0.vertex_capacity(), 0);
    std::vector<VertexId> stack;
    for (VertexId v : g0.vertices()) {
        stack.push_back(v);
        seen[v] = 1;
        break;
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g0.incident(v)) {
            if (!res.multiplicity[e]) continue;
            VertexId w = g0.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (VertexId v : g0.vertices())
        if (!seen[v]) return {false, "(c) multiset support disconnected"};
    // (d) edge_count = n + 2(cycles - 1)
    if (res.edge_count != res.n + 2LL * (res.cycles - 1))
        return {false, "(d) edge_count != n + 2(cycles-1)"};
    return {};
}

std::vector<std::vector<int>> completion_solver(GadgetKind kind, const FState& fstate) {
    const GadgetTemplate& t = gadget_template(kind);
    int ne = (int)t.internal_edges.size();
    if (ne > 24) throw BudgetExceededError("completion solver budget");

    std::vector<int> stub_degree(t.num_internal, 0);
    for (int s : fstate.used_slots) ++stub_degree[t.stub_owner[s]];

    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        std::vector<int> deg = stub_degree;
        for (int i = 0; i < ne; ++i)
            if (mask & (1u << i)) {
                ++deg[t.internal_edges[i].first];
                ++deg[t.internal_edges[i].second];
            }
        bool ok = true;
        for (int r = 0; r < t.num_internal && ok; ++r) ok = (deg[r] == 2);
        if (!ok) continue;
        std::vector<int> sel;
        for (int i = 0; i < ne; ++i)
            if (mask & (1u << i)) sel.push_back(i);
        out.push_back(std::move(sel));
    }
    return out;
}

}  // namespace bigcycle
