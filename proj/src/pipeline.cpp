#include "bigcycle/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <ostream>

namespace bigcycle {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void trace_step(const PipelineOptions& opt, const char* step, const CompressionRecord& rec,
                const std::string& case_id = "") {
    if (!opt.trace) return;
    std::ostream& os = *opt.trace;
    os << "{\"step\":\"" << step << "\",\"kind\":\"" << kind_name(rec.kind)
       << "\",\"internal_vertices\":[";
    for (size_t i = 0; i < rec.internal.size(); ++i)
        os << (i ? "," : "") << rec.internal[i];
    os << "],\"stub_map\":[";
    for (size_t s = 0; s < rec.boundary_pre.size(); ++s)
        os << (s ? "," : "") << "[" << rec.boundary_external[s] << "," << rec.boundary_pre[s]
           << "," << rec.boundary_post[s] << "]";
    os << "]";
    if (!case_id.empty()) os << ",\"case_id\":\"" << case_id << "\"";
    os << "}\n";
}

void check_structure(const MultiGraph& g, const char* where) {
    if (!is_cubic(g)) throw Error(std::string("graph not cubic after ") + where);
    if (!two_coloring(g)) throw Error(std::string("graph not bipartite after ") + where);
}

void check_factor(const MultiGraph& g, const TwoFactor& f, const char* where) {
    cycle_decomposition(g, f.edges);  // throws NotTwoRegularError
    (void)where;
}

// Tracks S'3 super-edge liveness across a compression: edges consumed as
// stubs transfer to their post ids, edges consumed internally die.
void update_s3_edges(EdgeSet& s3, const CompressionRecord& rec) {
    for (EdgeId e : rec.internal_edge_ids) s3.erase(e);
    for (size_t s = 0; s < rec.boundary_pre.size(); ++s)
        if (s3.contains(rec.boundary_pre[s])) {
            s3.erase(rec.boundary_pre[s]);
            s3.ensure(rec.boundary_post[s] + 1);
            s3.insert(rec.boundary_post[s]);
        }
    if (rec.kind == GadgetKind::S3) {
        s3.ensure(rec.created_edges[0] + 1);
        s3.insert(rec.created_edges[0]);
    }
}

TwoFactor fresh_two_factor(const MultiGraph& g, const EdgeSet& s3) {
    auto sides = two_coloring(g);
    if (!sides) throw Error("graph lost bipartiteness");
    return choose_two_factor(g, decompose_cubic(g, *sides), s3);
}

}  // namespace

PipelineOptions default_options() {
    PipelineOptions opt;
    const char* env = std::getenv("BIGCYCLE_DEBUG");
    opt.debug_checks = env && std::string(env) == "1";
    return opt;
}

CompressState compress_phase(const MultiGraph& g0, const PipelineOptions& opt) {
    CompressState st;
    st.graph = g0;
    st.s3_edges.ensure(g0.edge_capacity());

    const int limit = std::max(8, g0.num_vertices());
    auto compress_one = [&](const Occurrence& occ) {
        CompressionRecord rec = compress(st.graph, occ, (int)st.log.size());
        update_s3_edges(st.s3_edges, rec);
        trace_step(opt, "compress", rec);
        if (opt.debug_checks) check_structure(st.graph, "compress");
        st.log.push_back(std::move(rec));
        if (++st.compressions > limit)
            throw NonterminatingCompressionError("compression count exceeded vertex count");
    };

    auto squares_fixpoint = [&] {
        while (st.graph.num_vertices() > 6) {
            auto occ = find_square_occurrence(st.graph);
            if (!occ) break;
            compress_one(*occ);
        }
    };

    squares_fixpoint();
    st.factor = fresh_two_factor(st.graph, st.s3_edges);

    while (st.graph.num_vertices() > 6) {
        auto six = has_organic_six_cycle(st.graph, st.factor);
        if (!six) break;
        auto occ = find_h_occurrence(st.graph);
        if (!occ) throw Error("organic 6-cycle present but no H configuration found");
        compress_one(*occ);
        squares_fixpoint();
        st.factor = fresh_two_factor(st.graph, st.s3_edges);
    }
    return st;
}

TwoFactor expand_phase(CompressState& state, const PipelineOptions& opt) {
    TwoFactor f = state.factor;
    while (!state.log.empty()) {
        CompressionRecord rec = state.log.back();
        state.log.pop_back();

        FState fstate = read_fstate(state.graph, rec, f);
        expand_structure(state.graph, rec);
        RewireOutcome out = apply_expansion(state.graph, rec, f, fstate);
        trace_step(opt, "expand", rec, out.case_id);

        if (opt.debug_checks) {
            check_structure(state.graph, "expand");
            check_factor(state.graph, f, "expand");
        }

        if (out.may_introduce_six_cycle && rec.kind == GadgetKind::H1) {
            // The split cycle through reinstated hexagon vertices may be an
            // organic 6-cycle; if so, try the local improvement around it.
            f.refresh(state.graph);
            for (const Cycle& c : f.cycles) {
                if (c.length() != 6) continue;
                bool touches = false, organic = true;
                for (VertexId v : c.vertices) {
                    if (std::find(rec.internal.begin(), rec.internal.end(), v) !=
                        rec.internal.end())
                        touches = true;
                    if (!state.graph.organic(v)) organic = false;
                }
                for (EdgeId e : c.edges)
                    if (!state.graph.edge_organic(e)) organic = false;
                if (touches && organic) {
                    local_improvement(state.graph, f, c);
                    break;
                }
            }
            if (opt.debug_checks) check_factor(state.graph, f, "local improvement");
        }
    }
    f.refresh(state.graph);
    return f;
}

EulerianResult doubletree(const MultiGraph& g0, const TwoFactor& f) {
    if (!is_connected(g0)) throw DisconnectedError("doubletree needs a connected graph");

    std::vector<Cycle> cycles = cycle_decomposition(g0, f.edges);
    std::vector<int> cycle_of(g0.vertex_capacity(), -1);
    for (int ci = 0; ci < (int)cycles.size(); ++ci)
        for (VertexId v : cycles[ci].vertices) cycle_of[v] = ci;

    // BFS spanning tree over contracted cycles; edges tried in ascending id.
    std::vector<char> in_tree_comp(cycles.size(), 0);
    std::vector<EdgeId> tree;
    in_tree_comp[0] = 1;
    std::deque<int> frontier{0};
    std::vector<std::vector<EdgeId>> cycle_edges(cycles.size());
    for (EdgeId e : g0.edges()) {
        int cu = cycle_of[g0.edge_u(e)], cv = cycle_of[g0.edge_v(e)];
        if (cu != cv) {
            cycle_edges[cu].push_back(e);
            cycle_edges[cv].push_back(e);
        }
    }
    while (!frontier.empty()) {
        int ci = frontier.front();
        frontier.pop_front();
        for (EdgeId e : cycle_edges[ci]) {
            int cu = cycle_of[g0.edge_u(e)], cv = cycle_of[g0.edge_v(e)];
            int other = (cu == ci) ? cv : cu;
            if (!in_tree_comp[other]) {
                in_tree_comp[other] = 1;
                tree.push_back(e);
                frontier.push_back(other);
            }
        }
    }
    if ((int)tree.size() != (int)cycles.size() - 1)
        throw DisconnectedError("contracted graph not connected");

    EulerianResult res;
    res.n = g0.num_vertices();
    res.cycles = (int)cycles.size();
    res.multiplicity.assign(g0.edge_capacity(), 0);
    for (const Cycle& c : cycles)
        for (EdgeId e : c.edges) res.multiplicity[e] = 1;
    for (EdgeId e : tree) res.multiplicity[e] = 2;
    res.edge_count = 0;
    for (int8_t m : res.multiplicity) res.edge_count += m;
    return res;
}

namespace {

void validate_cubic_input(const MultiGraph& g) {
    if (g.num_vertices() == 0) throw InputInvalidError("empty graph");
    if (!is_cubic(g)) throw InputInvalidError("graph is not cubic");
    if (!is_simple(g)) throw InputInvalidError("graph has parallel edges");
    if (!two_coloring(g)) throw InputInvalidError("graph is not bipartite");
    if (!is_connected(g)) throw InputInvalidError("graph is not connected");
}

SolveReport make_report(const EulerianResult& res, int k) {
    SolveReport rep;
    rep.n = res.n;
    rep.k = k;
    rep.cycles = res.cycles;
    rep.edge_count = res.edge_count;
    rep.elapsed_ms = res.elapsed_ms;
    if (k == 3) {
        if (rep.n <= 6) {
            // Hamiltonian base case; the n/7 bound only applies for n > 6.
            rep.cycles_within_bound = rep.cycles == 1;
            rep.edges_within_bound = rep.edge_count == rep.n;
        } else {
            rep.cycles_within_bound = 7 * rep.cycles <= rep.n;
            rep.edges_within_bound = 7 * rep.edge_count <= 9 * rep.n - 14;
        }
    } else {
        // cycles <= n/7 + n/(42(k-2));  edges <= (9/7 + 1/(21(k-2))) n - 2
        long long d = k - 2;
        rep.cycles_within_bound = 42 * d * rep.cycles <= 6 * d * rep.n + rep.n;
        rep.edges_within_bound =
            21 * d * rep.edge_count <= (27 * d + 1) * rep.n - 42 * d;
    }
    return rep;
}

}  // namespace

std::pair<EulerianResult, SolveReport> bigcycle(const MultiGraph& g0,
                                                const PipelineOptions& opt) {
    auto t0 = Clock::now();
    validate_cubic_input(g0);

    CompressState st = compress_phase(g0, opt);
    TwoFactor f0 = expand_phase(st, opt);
    if (opt.debug_checks) check_factor(g0, f0, "final 2-factor");

    EulerianResult res = doubletree(g0, f0);
    res.elapsed_ms = ms_since(t0);
    return {res, make_report(res, 3)};
}

std::vector<VertexId> euler_circuit(const MultiGraph& g0, const EulerianResult& res) {
    // Hierholzer over the multiset.
    std::vector<int8_t> left = res.multiplicity;
    std::vector<size_t> scan(g0.vertex_capacity(), 0);
    VertexId start = kInvalidId;
    for (VertexId v : g0.vertices()) {
        start = v;
        break;
    }
    if (start == kInvalidId) return {};

    std::vector<VertexId> stack{start}, walk;
    while (!stack.empty()) {
        VertexId v = stack.back();
        const auto& inc = g0.incident(v);
        while (scan[v] < inc.size() && left[inc[scan[v]]] == 0) ++scan[v];
        if (scan[v] == inc.size()) {
            walk.push_back(v);
            stack.pop_back();
        } else {
            EdgeId e = inc[scan[v]];
            --left[e];
            stack.push_back(g0.other_end(e, v));
        }
    }
    return walk;
}

MultiGraph cubic_subgraph(const MultiGraph& g, int k, const Sides& sides) {
    std::vector<Matching> ms = peel_matchings(g, k, sides);
    auto build = [&](int i) {
        MultiGraph sub;
        for (VertexId v = 0; v < g.vertex_capacity(); ++v)
            if (g.vertex_alive(v)) sub.add_vertex_at(v, g.provenance(v));
        for (const Matching* m : {&ms[0], &ms[1], &ms[i]})
            for (EdgeId e : *m) sub.add_edge_at(e, g.edge_u(e), g.edge_v(e), true);
        return sub;
    };
    if (k == 3) return build(2);
    MultiGraph best = build(2);
    int best_k33 = count_k33_components(best);
    for (int i = 3; i < k; ++i) {
        MultiGraph cand = build(i);
        int c = count_k33_components(cand);
        if (c < best_k33) {
            best = std::move(cand);
            best_k33 = c;
        }
    }
    return best;
}

std::pair<EulerianResult, SolveReport> solve_k_regular(const MultiGraph& g, int k,
                                                       const PipelineOptions& opt) {
    auto t0 = Clock::now();
    if (k < 4) throw InputInvalidError("solve_k_regular needs k >= 4");
    if (g.num_vertices() == 0) throw InputInvalidError("empty graph");
    if (!is_k_regular(g, k)) throw InputInvalidError("graph is not k-regular");
    if (!is_simple(g)) throw InputInvalidError("graph has parallel edges");
    auto sides = two_coloring(g);
    if (!sides) throw InputInvalidError("graph is not bipartite");
    if (!is_connected(g)) throw InputInvalidError("graph is not connected");

    MultiGraph gc = cubic_subgraph(g, k, *sides);

    TwoFactor f;
    f.edges.ensure(g.edge_capacity());
    for (const auto& comp : connected_components(gc)) {
        // Component-induced subgraph with original ids.
        MultiGraph sub;
        std::vector<char> in_comp(gc.vertex_capacity(), 0);
        for (VertexId v : comp) in_comp[v] = 1;
        for (VertexId v : comp) sub.add_vertex_at(v, gc.provenance(v));
        for (EdgeId e : gc.edges())
            if (in_comp[gc.edge_u(e)] && in_comp[gc.edge_v(e)])
                sub.add_edge_at(e, gc.edge_u(e), gc.edge_v(e), true);

        if (comp.size() == 6) {
            // K3,3 component: any 2-factor is a Hamiltonian 6-cycle.
            auto s = two_coloring(sub);
            TwoFactor cf = choose_two_factor(sub, decompose_cubic(sub, *s), EdgeSet{});
            for (EdgeId e : sub.edges())
                if (cf.edges.contains(e)) f.edges.insert(e);
        } else {
            CompressState st = compress_phase(sub, opt);
            TwoFactor cf = expand_phase(st, opt);
            for (EdgeId e : sub.edges())
                if (cf.edges.contains(e)) f.edges.insert(e);
        }
    }
    f.refresh(g);

    EulerianResult res = doubletree(g, f);
    res.elapsed_ms = ms_since(t0);
    return {res, make_report(res, k)};
}

}  // namespace bigcycle
