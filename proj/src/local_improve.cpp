// The post-expansion local search: if an organic 6-cycle introduced by an
// H'1 expansion sits in the improvable configuration (its edge (a,b) on a graph
// hexagon whose other four vertices lie on an 8-cycle of the 2-factor that is
// bridged by a two-vertex path of a third cycle), rewire to cover the region
// with one fewer cycle.
#include <algorithm>

#include "bigcycle/gadgets.hpp"

namespace bigcycle {

namespace {

bool on_cycle(const Cycle& c, VertexId v) {
    return std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end();
}

EdgeId non_factor_edge(const MultiGraph& g, const TwoFactor& f, VertexId u, VertexId v) {
    for (EdgeId e : g.edges_between(u, v))
        if (!f.edges.contains(e)) return e;
    return kInvalidId;
}

// The other 2-factor neighbor of v, following away from edge `came`.
std::pair<VertexId, EdgeId> f_next(const MultiGraph& g, const TwoFactor& f, VertexId v,
                                   EdgeId came) {
    for (EdgeId e : g.incident(v))
        if (f.edges.contains(e) && e != came) return {g.other_end(e, v), e};
    return {kInvalidId, kInvalidId};
}

}  // namespace

bool local_improvement(const MultiGraph& g, TwoFactor& f, const Cycle& c1) {
    if (c1.length() != 6) return false;
    for (int idx = 0; idx < 6; ++idx) {
        EdgeId e_ab = c1.edges[idx];
        for (int flip = 0; flip < 2; ++flip) {
            VertexId a = flip ? g.edge_v(e_ab) : g.edge_u(e_ab);
            VertexId b = g.other_end(e_ab, a);

            // Graph hexagon a-b-c-d-e-fv with edges bc, fa outside the
            // 2-factor and cd, de, ef inside it.
            for (EdgeId ebc : g.incident(b)) {
                if (f.edges.contains(ebc)) continue;
                VertexId c = g.other_end(ebc, b);
                if (c == a || on_cycle(c1, c)) continue;
                for (EdgeId ecd : g.incident(c)) {
                    if (!f.edges.contains(ecd)) continue;
                    VertexId d = g.other_end(ecd, c);
                    if (d == b || on_cycle(c1, d)) continue;
                    for (EdgeId ede : g.incident(d)) {
                        if (!f.edges.contains(ede) || ede == ecd) continue;
                        VertexId e = g.other_end(ede, d);
                        if (e == c || on_cycle(c1, e)) continue;
                        for (EdgeId eef : g.incident(e)) {
                            if (!f.edges.contains(eef) || eef == ede) continue;
                            VertexId fv = g.other_end(eef, e);
                            if (fv == d || fv == c || on_cycle(c1, fv)) continue;
                            EdgeId efa = non_factor_edge(g, f, fv, a);
                            if (efa == kInvalidId) continue;

                            // The 2-factor cycle through c..fv must close as an
                            // 8-cycle c-d-e-fv-n6-p1-p2-n3-c.
                            auto [n3, ecn3] = f_next(g, f, c, ecd);
                            auto [n6, efn6] = f_next(g, f, fv, eef);
                            if (n3 == kInvalidId || n6 == kInvalidId || n3 == n6) continue;
                            auto [p1, en6p1] = f_next(g, f, n6, efn6);
                            if (p1 == kInvalidId || p1 == fv || p1 == n3) continue;
                            auto [p2, ep1p2] = f_next(g, f, p1, en6p1);
                            if (p2 == kInvalidId || p2 == n6) continue;
                            auto [back, ep2n3] = f_next(g, f, p2, ep1p2);
                            if (back != n3 || ecn3 == ep2n3) continue;
                            std::vector<VertexId> eight = {c, d, e, fv, n6, p1, p2, n3};
                            std::sort(eight.begin(), eight.end());
                            if (std::adjacent_find(eight.begin(), eight.end()) != eight.end())
                                continue;
                            bool touches_c1 = false;
                            for (VertexId x : eight)
                                if (on_cycle(c1, x)) touches_c1 = true;
                            if (touches_c1) continue;

                            // Bridge of a third cycle: e1 adjacent n6, e2
                            // adjacent n3, edge e1-e2 in the 2-factor.
                            for (EdgeId en6e1 : g.incident(n6)) {
                                if (f.edges.contains(en6e1)) continue;
                                VertexId e1 = g.other_end(en6e1, n6);
                                if (on_cycle(c1, e1)) continue;
                                if (std::find(eight.begin(), eight.end(), e1) != eight.end())
                                    continue;
                                for (EdgeId ee1e2 : g.incident(e1)) {
                                    if (!f.edges.contains(ee1e2)) continue;
                                    VertexId e2 = g.other_end(ee1e2, e1);
                                    if (e2 == n6 || on_cycle(c1, e2)) continue;
                                    if (std::find(eight.begin(), eight.end(), e2) !=
                                        eight.end())
                                        continue;
                                    EdgeId en3e2 = non_factor_edge(g, f, n3, e2);
                                    if (en3e2 == kInvalidId) continue;

                                    f.edges.erase(e_ab);
                                    f.edges.erase(ecn3);
                                    f.edges.erase(efn6);
                                    f.edges.erase(ee1e2);
                                    f.edges.insert(ebc);
                                    f.edges.insert(efa);
                                    f.edges.insert(en6e1);
                                    f.edges.insert(en3e2);
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace bigcycle
