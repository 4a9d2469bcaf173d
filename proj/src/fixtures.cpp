// Builds single-expansion fixtures: a compressed host containing exactly one
// gadget with a prescribed fstate, external arcs of chosen lengths, and
// degree-3 padding, plus the expected cycle multiset from the case formula.
#include <algorithm>
#include <map>

#include "bigcycle/instance_io.hpp"

namespace bigcycle {

namespace {

// Side of each template role (role 0 gets side 0).
std::vector<int> template_sides(const GadgetTemplate& t) {
    std::vector<int> side(t.num_internal, -1);
    side[0] = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [r1, r2] : t.internal_edges) {
            if (side[r1] != -1 && side[r2] == -1) {
                side[r2] = 1 - side[r1];
                grew = true;
            } else if (side[r2] != -1 && side[r1] == -1) {
                side[r1] = 1 - side[r2];
                grew = true;
            }
        }
    }
    return side;
}

const RewireEntry& entry_for(const std::string& case_id) {
    for (const RewireEntry& e : rewire_table()) {
        if (e.outcome.case_id == case_id) return e;
        for (const std::string& a : e.alias_case_ids)
            if (a == case_id) return e;
    }
    throw Error("unknown fixture case id: " + case_id);
}

}  // namespace

std::vector<FixtureSpec> fixture_catalog() {
    std::vector<FixtureSpec> specs;
    std::vector<std::string> seen;
    for (const RewireEntry& e : rewire_table()) {
        std::vector<std::string> ids{e.outcome.case_id};
        ids.insert(ids.end(), e.alias_case_ids.begin(), e.alias_case_ids.end());
        for (const std::string& id : ids) {
            if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
            seen.push_back(id);

            FixtureSpec generic{id, std::vector<int>(e.pairing.size(), 5)};
            specs.push_back(generic);

            if (e.outcome.may_introduce_six_cycle && !e.pairing.empty()) {
                // Variant realizing the organic 6-cycle: shrink the short
                // output cycle's arc to 6 - const.
                FixtureSpec six = generic;
                for (size_t ci = 0; ci < e.outcome.out_cycle_consts.size(); ++ci) {
                    int c = e.outcome.out_cycle_consts[ci];
                    if (c < 8 && e.outcome.out_cycle_arcs[ci].size() == 1) {
                        six.arc_lengths[e.outcome.out_cycle_arcs[ci][0]] = 6 - c;
                        specs.push_back(six);
                        break;
                    }
                }
            }
        }
    }
    return specs;
}

Fixture build_case_fixture(const std::string& case_id,
                               const std::vector<int>& arc_lengths) {
    Fixture fx = build_entry_fixture(entry_for(case_id), arc_lengths);
    fx.case_id = case_id;
    return fx;
}

Fixture build_entry_fixture(const RewireEntry& entry, const std::vector<int>& arc_lengths) {
    const GadgetTemplate& t = gadget_template(entry.kind);
    if (arc_lengths.size() != entry.pairing.size())
        throw InvalidLengthsError("arc count mismatch for " + entry.outcome.case_id);

    std::vector<int> role_side = template_sides(t);

    Fixture fx;
    fx.case_id = entry.outcome.case_id;
    fx.resolved_case_id = entry.outcome.case_id;
    MultiGraph& g = fx.graph;
    std::vector<int> side_of;  // parallel to vertex ids
    auto new_vertex = [&](int side) {
        VertexId v = g.add_vertex();
        if ((int)side_of.size() <= v) side_of.resize(v + 1, -1);
        side_of[v] = side;
        return v;
    };

    // Uncompressed configuration.
    Occurrence occ;
    occ.kind = entry.kind;
    for (int r = 0; r < t.num_internal; ++r) occ.internal.push_back(new_vertex(role_side[r]));
    for (auto [r1, r2] : t.internal_edges)
        occ.internal_edges.push_back(g.add_edge(occ.internal[r1], occ.internal[r2], true));

    // Externals; a zero-length arc means its two slots share one.
    std::vector<VertexId> ext(t.num_slots(), kInvalidId);
    std::vector<int> ext_side(t.num_slots());
    for (int s = 0; s < t.num_slots(); ++s) ext_side[s] = 1 - role_side[t.stub_owner[s]];
    for (size_t ai = 0; ai < entry.pairing.size(); ++ai) {
        if (arc_lengths[ai] != 0) continue;
        auto [s1, s2] = entry.pairing[ai];
        if (ext_side[s1] != ext_side[s2])
            throw InvalidLengthsError("zero-length arc needs same-side stubs");
        ext[s1] = ext[s2] = new_vertex(ext_side[s1]);
    }
    for (int s = 0; s < t.num_slots(); ++s)
        if (ext[s] == kInvalidId) ext[s] = new_vertex(ext_side[s]);
    for (int s = 0; s < t.num_slots(); ++s) {
        occ.stub_edges.push_back(g.add_edge(occ.internal[t.stub_owner[s]], ext[s], true));
        occ.stub_external.push_back(ext[s]);
    }

    // Arcs between paired externals; their edges enter the 2-factor.
    std::vector<EdgeId> arc_edges;
    std::vector<int> real_lengths(entry.pairing.size());
    for (size_t ai = 0; ai < entry.pairing.size(); ++ai) {
        auto [s1, s2] = entry.pairing[ai];
        int len = arc_lengths[ai];
        int want_parity = (ext_side[s1] != ext_side[s2]) ? 1 : 0;
        if (len != 0 && len % 2 != want_parity) ++len;
        if (len == 0 && want_parity == 1)
            throw InvalidLengthsError("zero-length arc parity impossible");
        real_lengths[ai] = len;
        if (len == 0) continue;
        VertexId prev = ext[s1];
        int prev_side = ext_side[s1];
        for (int step = 0; step < len - 1; ++step) {
            VertexId nxt = new_vertex(1 - prev_side);
            arc_edges.push_back(g.add_edge(prev, nxt, true));
            prev = nxt;
            prev_side = 1 - prev_side;
        }
        arc_edges.push_back(g.add_edge(prev, ext[s2], true));
    }

    // Unused externals (and the retained S3 endpoints when uncovered) are
    // covered by doubled fillers.
    std::vector<EdgeId> filler_cycles;
    for (int s = 0; s < t.num_slots(); ++s) {
        bool used = std::find(entry.used_slots.begin(), entry.used_slots.end(), s) !=
                    entry.used_slots.end();
        if (used) continue;
        VertexId z = new_vertex(1 - ext_side[s]);
        filler_cycles.push_back(g.add_edge(ext[s], z));
        filler_cycles.push_back(g.add_edge(ext[s], z));
        ++fx.scaffold_two_cycles;
    }

    // Degree-3 padding: remaining deficits are all single and already covered
    // by the 2-factor; pair them across sides.
    {
        std::vector<VertexId> defA, defB;
        for (VertexId v : g.vertices()) {
            bool internal = std::find(occ.internal.begin(), occ.internal.end(), v) !=
                            occ.internal.end();
            if (internal) continue;
            int d = 3 - g.degree(v);
            if (d == 0) continue;
            if (d != 1) throw Error("fixture padding: unexpected deficit");
            (side_of[v] == 0 ? defA : defB).push_back(v);
        }
        if (defA.size() != defB.size()) throw Error("fixture padding: side imbalance");
        for (size_t i = 0; i < defA.size(); ++i) g.add_edge(defA[i], defB[i]);
    }

    fx.record = compress(g, occ, 0);

    // The compressed 2-factor.
    fx.factor.edges.ensure(g.edge_capacity());
    for (int s : entry.used_slots) fx.factor.edges.insert(fx.record.boundary_post[s]);
    for (EdgeId e : arc_edges) fx.factor.edges.insert(e);
    for (EdgeId e : filler_cycles) fx.factor.edges.insert(e);
    switch (t.shape) {
        case ReplacementShape::TwoAdjacentSV:
            if (entry.internal_edge_used) fx.factor.edges.insert(fx.record.created_edges[0]);
            break;
        case ReplacementShape::SuperEdge:
            if (entry.internal_edge_used) fx.factor.edges.insert(fx.record.created_edges[0]);
            break;
        case ReplacementShape::Dumbbells:
            for (size_t di = 0; di < t.dumbbell_slots.size(); ++di) {
                auto [sA, sB] = t.dumbbell_slots[di];
                bool traversed = std::find(entry.used_slots.begin(), entry.used_slots.end(),
                                           sA) != entry.used_slots.end();
                fx.factor.edges.insert(fx.record.created_edges[2 * di]);
                if (!traversed) fx.factor.edges.insert(fx.record.created_edges[2 * di + 1]);
            }
            break;
        default:
            break;
    }
    fx.factor.refresh(g);

    // Expected multiset after expansion: case formula plus scaffold.
    for (size_t ci = 0; ci < entry.outcome.out_cycle_consts.size(); ++ci) {
        int len = entry.outcome.out_cycle_consts[ci];
        for (int ai : entry.outcome.out_cycle_arcs[ci]) len += real_lengths[ai];
        fx.expected_cycles.push_back(len);
    }
    for (int i = 0; i < fx.scaffold_two_cycles; ++i) fx.expected_cycles.push_back(2);
    std::sort(fx.expected_cycles.begin(), fx.expected_cycles.end());
    fx.expect_six_flag = entry.outcome.may_introduce_six_cycle;
    return fx;
}

}  // namespace bigcycle
