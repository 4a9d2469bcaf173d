// Gadget replacement, structural expansion and the 2-factor bookkeeping of a
// single expansion step.
#include <algorithm>

#include "bigcycle/gadgets.hpp"

namespace bigcycle {

namespace {

void check_occurrence(const MultiGraph& g, const Occurrence& occ) {
    const GadgetTemplate& t = gadget_template(occ.kind);
    if ((int)occ.internal.size() != t.num_internal)
        throw OccurrenceStaleError("internal size mismatch");
    for (VertexId v : occ.internal)
        if (!g.vertex_alive(v) || g.degree(v) != 3)
            throw OccurrenceStaleError("internal vertex changed");
    for (size_t i = 0; i < t.internal_edges.size(); ++i) {
        EdgeId e = occ.internal_edges[i];
        auto [r1, r2] = t.internal_edges[i];
        if (!g.edge_alive(e)) throw OccurrenceStaleError("internal edge dead");
        VertexId u = g.edge_u(e), v = g.edge_v(e);
        VertexId a = occ.internal[r1], b = occ.internal[r2];
        if (!((u == a && v == b) || (u == b && v == a)))
            throw OccurrenceStaleError("internal edge moved");
    }
    for (int s = 0; s < t.num_slots(); ++s) {
        EdgeId e = occ.stub_edges[s];
        if (!g.edge_alive(e)) throw OccurrenceStaleError("stub edge dead");
        VertexId owner = occ.internal[t.stub_owner[s]];
        if (g.other_end(e, owner) != occ.stub_external[s])
            throw OccurrenceStaleError("stub edge moved");
    }
}

}  // namespace

CompressionRecord compress(MultiGraph& g, const Occurrence& occ, int record_index) {
    check_occurrence(g, occ);
    const GadgetTemplate& t = gadget_template(occ.kind);

    CompressionRecord rec;
    rec.index = record_index;
    rec.kind = occ.kind;
    rec.internal = occ.internal;
    for (VertexId v : occ.internal) rec.internal_prov.push_back(g.provenance(v));
    rec.internal_edge_ids = occ.internal_edges;
    for (EdgeId e : occ.internal_edges) rec.internal_edge_organic.push_back(g.edge_organic(e));
    rec.boundary_external = occ.stub_external;
    rec.boundary_pre = occ.stub_edges;
    for (EdgeId e : occ.stub_edges) rec.boundary_pre_organic.push_back(g.edge_organic(e));

    for (EdgeId e : occ.internal_edges) g.remove_edge(e);
    for (EdgeId e : occ.stub_edges) g.remove_edge(e);
    for (VertexId v : occ.internal) g.remove_vertex(v);

    rec.boundary_post.assign(t.num_slots(), kInvalidId);
    switch (t.shape) {
        case ReplacementShape::TwoAdjacentSV:
        case ReplacementShape::TwoFreeSV: {
            VertexId u = g.add_vertex({record_index, 0});
            VertexId v = g.add_vertex({record_index, 1});
            rec.created_vertices = {u, v};
            if (t.shape == ReplacementShape::TwoAdjacentSV)
                rec.created_edges.push_back(g.add_edge(u, v));
            for (int s : t.sv_slots[0])
                rec.boundary_post[s] = g.add_edge(u, occ.stub_external[s]);
            for (int s : t.sv_slots[1])
                rec.boundary_post[s] = g.add_edge(v, occ.stub_external[s]);
            break;
        }
        case ReplacementShape::OneSV: {
            VertexId u = g.add_vertex({record_index, 0});
            rec.created_vertices = {u};
            for (int s : t.sv_slots[0])
                rec.boundary_post[s] = g.add_edge(u, occ.stub_external[s]);
            break;
        }
        case ReplacementShape::SuperEdge: {
            EdgeId se = g.add_edge(occ.stub_external[0], occ.stub_external[1]);
            rec.created_edges = {se};
            rec.boundary_post[0] = rec.boundary_post[1] = se;
            break;
        }
        case ReplacementShape::Dumbbells: {
            for (size_t di = 0; di < t.dumbbell_slots.size(); ++di) {
                auto [sA, sB] = t.dumbbell_slots[di];
                VertexId p = g.add_vertex({record_index, (int)(2 * di)});
                VertexId q = g.add_vertex({record_index, (int)(2 * di + 1)});
                rec.created_vertices.insert(rec.created_vertices.end(), {p, q});
                rec.created_edges.push_back(g.add_edge(p, q));
                rec.created_edges.push_back(g.add_edge(p, q));
                rec.boundary_post[sA] = g.add_edge(p, occ.stub_external[sA]);
                rec.boundary_post[sB] = g.add_edge(q, occ.stub_external[sB]);
            }
            break;
        }
    }
    return rec;
}

void expand_structure(MultiGraph& g, const CompressionRecord& rec) {
    for (VertexId v : rec.created_vertices)
        if (!g.vertex_alive(v)) throw RecordMismatchError("gadget vertex absent");
    for (EdgeId e : rec.created_edges)
        if (!g.edge_alive(e)) throw RecordMismatchError("gadget edge absent");
    for (EdgeId e : rec.boundary_post)
        if (!g.edge_alive(e)) throw RecordMismatchError("gadget stub edge absent");
    // Created vertices must carry only gadget edges, i.e. no later compression
    // has touched them (LIFO contract).
    for (VertexId v : rec.created_vertices)
        for (EdgeId e : g.incident(v)) {
            bool ours = std::find(rec.created_edges.begin(), rec.created_edges.end(), e) !=
                            rec.created_edges.end() ||
                        std::find(rec.boundary_post.begin(), rec.boundary_post.end(), e) !=
                            rec.boundary_post.end();
            if (!ours) throw RecordMismatchError("gadget vertex has foreign edge");
        }

    std::vector<EdgeId> doomed = rec.created_edges;
    for (EdgeId e : rec.boundary_post) doomed.push_back(e);
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    for (EdgeId e : doomed) g.remove_edge(e);
    for (VertexId v : rec.created_vertices) g.remove_vertex(v);

    const GadgetTemplate& t = gadget_template(rec.kind);
    for (int r = 0; r < t.num_internal; ++r)
        g.add_vertex_at(rec.internal[r], rec.internal_prov[r]);
    for (size_t i = 0; i < t.internal_edges.size(); ++i) {
        auto [r1, r2] = t.internal_edges[i];
        g.add_edge_at(rec.internal_edge_ids[i], rec.internal[r1], rec.internal[r2],
                      rec.internal_edge_organic[i]);
    }
    for (int s = 0; s < t.num_slots(); ++s)
        g.add_edge_at(rec.boundary_pre[s], rec.internal[t.stub_owner[s]],
                      rec.boundary_external[s], rec.boundary_pre_organic[s]);
}

namespace {

// Next 2-factor edge at v other than prev.
EdgeId f_step(const MultiGraph& g, const TwoFactor& f, VertexId v, EdgeId prev) {
    for (EdgeId e : g.incident(v))
        if (f.edges.contains(e) && e != prev) return e;
    throw Error("2-factor walk stuck");
}

}  // namespace

FState read_fstate(const MultiGraph& g, const CompressionRecord& rec, const TwoFactor& f) {
    const GadgetTemplate& t = gadget_template(rec.kind);
    FState st;

    if (t.shape == ReplacementShape::SuperEdge) {
        st.internal_edge_used = f.edges.contains(rec.created_edges[0]);
        if (st.internal_edge_used) {
            st.used_slots = {0, 1};
            st.pairing = {{0, 1}};
        }
        return st;
    }

    if (t.shape == ReplacementShape::Dumbbells) {
        for (size_t di = 0; di < t.dumbbell_slots.size(); ++di) {
            int in_f = (int)f.edges.contains(rec.created_edges[2 * di]) +
                       (int)f.edges.contains(rec.created_edges[2 * di + 1]);
            auto [sA, sB] = t.dumbbell_slots[di];
            if (in_f == 1) {
                if (!f.edges.contains(rec.boundary_post[sA]) ||
                    !f.edges.contains(rec.boundary_post[sB]))
                    throw Error("traversed dumbbell without stub edges in 2-factor");
                st.used_slots.push_back(sA);
                st.used_slots.push_back(sB);
            } else if (in_f != 2) {
                throw Error("dumbbell pair not covered by 2-factor");
            }
        }
    } else {
        if (!rec.created_edges.empty())
            st.internal_edge_used = f.edges.contains(rec.created_edges[0]);
        for (int s = 0; s < t.num_slots(); ++s)
            if (f.edges.contains(rec.boundary_post[s])) st.used_slots.push_back(s);
    }
    std::sort(st.used_slots.begin(), st.used_slots.end());

    // External arcs: walk the 2-factor away from each used stub until it
    // re-enters a gadget vertex of this record.
    std::vector<char> paired(t.num_slots(), 0);
    for (int s : st.used_slots) {
        if (paired[s]) continue;
        EdgeId prev = rec.boundary_post[s];
        VertexId cur = rec.boundary_external[s];
        while (true) {
            EdgeId e = f_step(g, f, cur, prev);
            VertexId nxt = g.other_end(e, cur);
            bool into_gadget = std::find(rec.created_vertices.begin(),
                                         rec.created_vertices.end(),
                                         nxt) != rec.created_vertices.end();
            if (into_gadget) {
                int s2 = -1;
                for (int cand : st.used_slots)
                    if (rec.boundary_post[cand] == e) s2 = cand;
                if (s2 == -1) throw Error("arc re-entered gadget off-slot");
                st.pairing.emplace_back(s, s2);
                paired[s] = paired[s2] = 1;
                break;
            }
            prev = e;
            cur = nxt;
        }
    }
    canonicalize_pairing(st.pairing);
    return st;
}

RewireOutcome apply_expansion(MultiGraph& g, const CompressionRecord& rec, TwoFactor& f,
                              const FState& fstate) {
    RewireOutcome out = rewire_two_factor(rec.kind, fstate);
    for (EdgeId e : rec.created_edges) f.edges.erase(e);
    for (EdgeId e : rec.boundary_post) f.edges.erase(e);
    f.edges.ensure(g.edge_capacity());
    for (int s : fstate.used_slots) f.edges.insert(rec.boundary_pre[s]);
    for (int idx : out.completion_edge_indexes) f.edges.insert(rec.internal_edge_ids[idx]);
    return out;
}

std::optional<Cycle> has_organic_six_cycle(const MultiGraph& g, const TwoFactor& f) {
    for (const Cycle& c : cycle_decomposition(g, f.edges)) {
        if (c.length() != 6) continue;
        bool organic = true;
        for (VertexId v : c.vertices)
            if (!g.organic(v)) organic = false;
        for (EdgeId e : c.edges)
            if (!g.edge_organic(e)) organic = false;
        if (!organic) continue;
        if (in_k33_component(g, c.vertices[0])) continue;
        return c;
    }
    return std::nullopt;
}

}  // namespace bigcycle
