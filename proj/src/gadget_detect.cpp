// Detection of compressible configurations. Squares are classified by the
// coincidence pattern of their outgoing edges (S3 > S2 > S1); hexagon
// configurations are found by extending organic chordless 6-cycles and
// reported most-specialized-first (H6 > ... > H1).
#include <algorithm>
#include <array>

#include "bigcycle/gadgets.hpp"

namespace bigcycle {

namespace {

struct Candidate {
    int priority;  // higher wins
    Occurrence occ;
    std::vector<VertexId> sorted;
};

void consider(std::optional<Candidate>& best, int priority, Occurrence occ) {
    Candidate c{priority, std::move(occ), {}};
    c.sorted = c.occ.sorted_internal();
    if (!best || c.priority > best->priority ||
        (c.priority == best->priority &&
         (c.sorted < best->sorted ||
          (c.sorted == best->sorted && c.occ.internal < best->occ.internal))))
        best = std::move(c);
}

// K3,3-component membership, cached per vertex for one detection pass.
struct K33Cache {
    const MultiGraph& g;
    std::vector<int8_t> memo;
    explicit K33Cache(const MultiGraph& gr) : g(gr), memo(gr.vertex_capacity(), -1) {}
    bool operator()(VertexId v) {
        if (memo[v] == -1) memo[v] = in_k33_component(g, v) ? 1 : 0;
        return memo[v] == 1;
    }
};

}  // namespace

std::optional<Occurrence> find_square_occurrence(const MultiGraph& g) {
    std::optional<Candidate> best;
    K33Cache in_k33(g);

    for (VertexId a : g.vertices()) {
        const auto& inc = g.incident(a);
        for (size_t i1 = 0; i1 < inc.size(); ++i1)
            for (size_t i2 = i1 + 1; i2 < inc.size(); ++i2) {
                EdgeId e1 = inc[i1], e2 = inc[i2];
                VertexId b = g.other_end(e1, a), d = g.other_end(e2, a);
                if (b == d) continue;  // parallel pair, not a square
                if (b > d) {
                    std::swap(b, d);
                    std::swap(e1, e2);
                }
                if (a > b || a > d) continue;
                for (EdgeId e3 : g.incident(b)) {
                    VertexId c = g.other_end(e3, b);
                    if (c == a || c == d || c < a) continue;
                    for (EdgeId e4 : g.incident(d)) {
                        if (g.other_end(e4, d) != c) continue;
                        // Square a-b-c-d with sides e1,e3,e4,e2.
                        EdgeId oa = g.third_edge(a, e1, e2);
                        EdgeId ob = g.third_edge(b, e1, e3);
                        EdgeId oc = g.third_edge(c, e3, e4);
                        EdgeId od = g.third_edge(d, e2, e4);
                        if (oa == kInvalidId || ob == kInvalidId || oc == kInvalidId ||
                            od == kInvalidId)
                            continue;
                        VertexId wa = g.other_end(oa, a), wb = g.other_end(ob, b);
                        VertexId wc = g.other_end(oc, c), wd = g.other_end(od, d);
                        auto inside = [&](VertexId x) {
                            return x == a || x == b || x == c || x == d;
                        };
                        // Degenerate (outgoing edge re-enters the square):
                        // only at doubled-edge gadget pairs; not in the catalog.
                        if (inside(wa) || inside(wb) || inside(wc) || inside(wd)) continue;
                        if (in_k33(a)) continue;

                        bool share_ac = (wa == wc), share_bd = (wb == wd);
                        if (share_ac && share_bd) {
                            EdgeId eA = g.third_edge(wa, oa, oc);
                            EdgeId fB = g.third_edge(wb, ob, od);
                            if (eA == kInvalidId || fB == kInvalidId) continue;
                            VertexId A = g.other_end(eA, wa), Bv = g.other_end(fB, wb);
                            auto incfg = [&](VertexId x) {
                                return inside(x) || x == wa || x == wb;
                            };
                            if (incfg(A) || incfg(Bv) || A == Bv) continue;
                            Occurrence occ;
                            occ.kind = GadgetKind::S3;
                            occ.internal = {a, b, c, d, wa, wb};
                            occ.internal_edges = {e1, e3, e4, e2, oa, oc, ob, od};
                            occ.stub_edges = {eA, fB};
                            occ.stub_external = {A, Bv};
                            consider(best, 3, std::move(occ));
                        } else if (share_ac || share_bd) {
                            // Orient so the capped pair is (a', c').
                            VertexId sa = a, sb = b, sc = c, sd = d, cap = wa;
                            EdgeId f1 = e1, f2 = e3, f3 = e4, f4 = e2;
                            EdgeId ca = oa, cc = oc, sb_out = ob, sd_out = od;
                            if (share_bd) {
                                sa = b; sb = c; sc = d; sd = a; cap = wb;
                                f1 = e3; f2 = e4; f3 = e2; f4 = e1;
                                ca = ob; cc = od; sb_out = oc; sd_out = oa;
                            }
                            EdgeId cap_stub = g.third_edge(cap, ca, cc);
                            if (cap_stub == kInvalidId) continue;
                            VertexId cap_ext = g.other_end(cap_stub, cap);
                            if (cap_ext == sa || cap_ext == sb || cap_ext == sc ||
                                cap_ext == sd || cap_ext == cap)
                                continue;
                            Occurrence occ;
                            occ.kind = GadgetKind::S2;
                            occ.internal = {sa, sb, sc, sd, cap};
                            occ.internal_edges = {f1, f2, f3, f4, ca, cc};
                            occ.stub_edges = {cap_stub, sb_out, sd_out};
                            occ.stub_external = {cap_ext, g.other_end(sb_out, sb),
                                                 g.other_end(sd_out, sd)};
                            consider(best, 2, std::move(occ));
                        } else {
                            Occurrence occ;
                            occ.kind = GadgetKind::S1;
                            occ.internal = {a, b, c, d};
                            occ.internal_edges = {e1, e3, e4, e2};
                            occ.stub_edges = {oa, ob, oc, od};
                            occ.stub_external = {wa, wb, wc, wd};
                            consider(best, 1, std::move(occ));
                        }
                    }
                }
            }
    }
    if (!best) return std::nullopt;
    return best->occ;
}

namespace {

// Smallest organic edge between two organic vertices, or kInvalidId.
EdgeId organic_edge(const MultiGraph& g, VertexId u, VertexId v) {
    for (EdgeId e : g.incident(u))
        if (g.other_end(e, u) == v && g.edge_organic(e)) return e;
    return kInvalidId;
}

struct HexMatcher {
    const MultiGraph& g;
    std::optional<Candidate>& best;

    bool organic(VertexId v) const { return g.vertex_alive(v) && g.organic(v); }

    // Neighbors over organic edges.
    std::vector<std::pair<VertexId, EdgeId>> organic_neighbors(VertexId v) const {
        std::vector<std::pair<VertexId, EdgeId>> out;
        for (EdgeId e : g.incident(v))
            if (g.edge_organic(e)) out.emplace_back(g.other_end(e, v), e);
        return out;
    }

    // Attempts every extension of the labeled hexagon hx (roles a..f).
    void try_labeling(const std::array<VertexId, 6>& hx) {
        auto taken = [&](VertexId v, const std::vector<VertexId>& extra) {
            for (VertexId x : hx)
                if (x == v) return true;
            for (VertexId x : extra)
                if (x == v) return true;
            return false;
        };

        emit_h1(hx);

        // Inner 2-path b-g-h-e.
        for (auto [gv, eg] : organic_neighbors(hx[1])) {
            if (!organic(gv) || taken(gv, {})) continue;
            for (auto [hv, eh] : organic_neighbors(gv)) {
                if (!organic(hv) || hv == hx[1] || taken(hv, {gv})) continue;
                EdgeId ehe = organic_edge(g, hv, hx[4]);
                if (ehe == kInvalidId) continue;
                emit_h2(hx, gv, hv, eg, eh, ehe);

                // Outer 2-path a-i-j-d.
                for (auto [iv, ei] : organic_neighbors(hx[0])) {
                    if (!organic(iv) || taken(iv, {gv, hv})) continue;
                    for (auto [jv, ej] : organic_neighbors(iv)) {
                        if (!organic(jv) || jv == hx[0] || taken(jv, {gv, hv, iv})) continue;
                        EdgeId ejd = organic_edge(g, jv, hx[3]);
                        if (ejd == kInvalidId) continue;
                        emit_h3(hx, gv, hv, iv, jv, {eg, eh, ehe, ei, ej, ejd});
                        try_h456(hx, gv, hv, iv, jv, {eg, eh, ehe, ei, ej, ejd});
                    }
                }
            }
        }
    }

    void emit_h1(const std::array<VertexId, 6>& hx) {
        Occurrence occ;
        occ.kind = GadgetKind::H1;
        occ.internal.assign(hx.begin(), hx.end());
        fill_hexagon_edges(occ, hx);
        if (!fill_stubs(occ)) return;
        consider(best, 4, std::move(occ));
    }

    void fill_hexagon_edges(Occurrence& occ, const std::array<VertexId, 6>& hx) {
        for (int i = 0; i < 6; ++i)
            occ.internal_edges.push_back(organic_edge(g, hx[i], hx[(i + 1) % 6]));
    }

    // Stub edges per slot from template owners; false if a stub would point
    // back into the occurrence.
    bool fill_stubs(Occurrence& occ) {
        const GadgetTemplate& t = gadget_template(occ.kind);
        occ.stub_edges.assign(t.num_slots(), kInvalidId);
        occ.stub_external.assign(t.num_slots(), kInvalidId);
        for (int s = 0; s < t.num_slots(); ++s) {
            VertexId owner = occ.internal[t.stub_owner[s]];
            EdgeId stub = kInvalidId;
            for (EdgeId e : g.incident(owner)) {
                if (std::find(occ.internal_edges.begin(), occ.internal_edges.end(), e) !=
                    occ.internal_edges.end())
                    continue;
                if (stub != kInvalidId) return false;
                stub = e;
            }
            if (stub == kInvalidId) return false;
            VertexId ext = g.other_end(stub, owner);
            if (std::find(occ.internal.begin(), occ.internal.end(), ext) != occ.internal.end())
                return false;
            occ.stub_edges[s] = stub;
            occ.stub_external[s] = ext;
        }
        return true;
    }

    void emit_h2(const std::array<VertexId, 6>& hx, VertexId gv, VertexId hv, EdgeId eg,
                 EdgeId eh, EdgeId ehe) {
        Occurrence occ;
        occ.kind = GadgetKind::H2;
        occ.internal.assign(hx.begin(), hx.end());
        occ.internal.push_back(gv);
        occ.internal.push_back(hv);
        fill_hexagon_edges(occ, hx);
        occ.internal_edges.insert(occ.internal_edges.end(), {eg, eh, ehe});
        if (!fill_stubs(occ)) return;
        consider(best, 5, std::move(occ));
    }

    void emit_h3(const std::array<VertexId, 6>& hx, VertexId gv, VertexId hv, VertexId iv,
                 VertexId jv, std::array<EdgeId, 6> extra) {
        Occurrence occ;
        occ.kind = GadgetKind::H3;
        occ.internal.assign(hx.begin(), hx.end());
        occ.internal.insert(occ.internal.end(), {gv, hv, iv, jv});
        fill_hexagon_edges(occ, hx);
        occ.internal_edges.insert(occ.internal_edges.end(), extra.begin(), extra.end());
        if (!fill_stubs(occ)) return;
        consider(best, 6, std::move(occ));
    }

    void try_h456(const std::array<VertexId, 6>& hx, VertexId gv, VertexId hv, VertexId iv,
                  VertexId jv, std::array<EdgeId, 6> extra) {
        auto taken = [&](VertexId v) {
            for (VertexId x : hx)
                if (x == v) return true;
            return v == gv || v == hv || v == iv || v == jv;
        };
        // w1 adjacent to j and g, w2 adjacent to i and h.
        for (auto [w1, ejw1] : organic_neighbors(jv)) {
            if (!organic(w1) || taken(w1)) continue;
            EdgeId egw1 = organic_edge(g, gv, w1);
            if (egw1 == kInvalidId) continue;
            for (auto [w2, eiw2] : organic_neighbors(iv)) {
                if (!organic(w2) || taken(w2) || w2 == w1) continue;
                EdgeId ehw2 = organic_edge(g, hv, w2);
                if (ehw2 == kInvalidId) continue;

                std::vector<VertexId> base(hx.begin(), hx.end());
                base.insert(base.end(), {gv, hv, iv, jv, w1, w2});
                std::vector<EdgeId> base_edges;
                for (int i = 0; i < 6; ++i)
                    base_edges.push_back(organic_edge(g, hx[i], hx[(i + 1) % 6]));
                base_edges.insert(base_edges.end(), extra.begin(), extra.end());
                base_edges.insert(base_edges.end(), {ejw1, egw1, eiw2, ehw2});

                Occurrence h4;
                h4.kind = GadgetKind::H4;
                h4.internal = base;
                h4.internal_edges = base_edges;
                if (fill_stubs(h4)) consider(best, 7, std::move(h4));

                auto in_base = [&](VertexId v) {
                    return std::find(base.begin(), base.end(), v) != base.end();
                };
                // m (H5) / l (H6) adjacent to w2 and c; r adjacent to w1 and f.
                for (auto [mv, emw2] : organic_neighbors(w2)) {
                    if (!organic(mv) || in_base(mv)) continue;
                    EdgeId emc = organic_edge(g, mv, hx[2]);
                    if (emc == kInvalidId) continue;

                    bool made_h6 = false;
                    for (auto [rv, erw1] : organic_neighbors(w1)) {
                        if (!organic(rv) || in_base(rv) || rv == mv) continue;
                        EdgeId erf = organic_edge(g, rv, hx[5]);
                        if (erf == kInvalidId) continue;
                        Occurrence h6;
                        h6.kind = GadgetKind::H6;
                        h6.internal = base;
                        h6.internal.insert(h6.internal.end(), {mv, rv});
                        h6.internal_edges = base_edges;
                        h6.internal_edges.insert(h6.internal_edges.end(),
                                                 {emw2, emc, erw1, erf});
                        if (fill_stubs(h6)) {
                            consider(best, 9, std::move(h6));
                            made_h6 = true;
                        }
                    }
                    if (made_h6) continue;
                    Occurrence h5;
                    h5.kind = GadgetKind::H5;
                    h5.internal = base;
                    h5.internal.push_back(mv);
                    h5.internal_edges = base_edges;
                    h5.internal_edges.insert(h5.internal_edges.end(), {emw2, emc});
                    if (fill_stubs(h5)) consider(best, 8, std::move(h5));
                }
            }
        }
    }
};

}  // namespace

std::optional<Occurrence> find_h_occurrence(const MultiGraph& g) {
    std::optional<Candidate> best;
    HexMatcher matcher{g, best};

    // Enumerate organic chordless hexagons once, each in canonical order
    // (smallest vertex first, second < last), then try all 12 labelings.
    for (VertexId v0 : g.vertices()) {
        if (!g.organic(v0)) continue;
        std::array<VertexId, 6> path{v0, 0, 0, 0, 0, 0};
        auto dfs = [&](auto&& self, int depth) -> void {
            if (depth == 6) {
                if (organic_edge(g, path[5], v0) == kInvalidId) return;
                if (path[1] > path[5]) return;  // direction dedupe
                // Chordless: no graph edge between non-consecutive positions.
                for (int i = 0; i < 6; ++i)
                    for (int j = i + 2; j < 6; ++j) {
                        if (i == 0 && j == 5) continue;
                        if (g.adjacent(path[i], path[j])) return;
                    }
                for (int rot = 0; rot < 6; ++rot)
                    for (int dir : {1, -1}) {
                        std::array<VertexId, 6> hx;
                        for (int i = 0; i < 6; ++i) hx[i] = path[((rot + dir * i) % 6 + 6) % 6];
                        matcher.try_labeling(hx);
                    }
                return;
            }
            VertexId cur = path[depth - 1];
            for (auto [nb, e] : matcher.organic_neighbors(cur)) {
                if (!matcher.organic(nb) || nb <= v0) continue;
                bool dup = false;
                for (int i = 1; i < depth; ++i)
                    if (path[i] == nb) dup = true;
                if (dup) continue;
                path[depth] = nb;
                self(self, depth + 1);
            }
        };
        dfs(dfs, 1);
    }
    if (!best) return std::nullopt;
    return best->occ;
}

}  // namespace bigcycle
