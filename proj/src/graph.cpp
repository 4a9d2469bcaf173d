#include "bigcycle/graph.hpp"

#include <algorithm>
#include <deque>

namespace bigcycle {

VertexId MultiGraph::add_vertex(Provenance prov) {
    verts_.push_back(VertexSlot{true, prov, {}});
    ++alive_vertices_;
    return (int)verts_.size() - 1;
}

void MultiGraph::add_vertex_at(VertexId id, Provenance prov) {
    if (id >= (int)verts_.size()) verts_.resize(id + 1);
    if (verts_[id].alive) throw Error("vertex id already alive: " + std::to_string(id));
    verts_[id] = VertexSlot{true, prov, {}};
    ++alive_vertices_;
}

VertexId MultiGraph::reserve_vertex_id() {
    verts_.push_back(VertexSlot{});
    return (int)verts_.size() - 1;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, bool organic) {
    if (u == v) throw InputInvalidError("self-loop rejected at vertex " + std::to_string(u));
    if (!vertex_alive(u) || !vertex_alive(v)) throw Error("edge endpoint not alive");
    edges_.push_back(EdgeSlot{true, u, v, organic});
    ++alive_edges_;
    EdgeId e = (int)edges_.size() - 1;
    attach(e);
    return e;
}

void MultiGraph::add_edge_at(EdgeId id, VertexId u, VertexId v, bool organic) {
    if (u == v) throw InputInvalidError("self-loop rejected at vertex " + std::to_string(u));
    if (!vertex_alive(u) || !vertex_alive(v)) throw Error("edge endpoint not alive");
    if (id >= (int)edges_.size()) edges_.resize(id + 1);
    if (edges_[id].alive) throw Error("edge id already alive: " + std::to_string(id));
    edges_[id] = EdgeSlot{true, u, v, organic};
    ++alive_edges_;
    attach(id);
}

EdgeId MultiGraph::reserve_edge_id() {
    edges_.push_back(EdgeSlot{});
    return (int)edges_.size() - 1;
}

void MultiGraph::remove_vertex(VertexId v) {
    if (!vertex_alive(v)) throw Error("removing dead vertex");
    if (!verts_[v].inc.empty()) throw Error("removing vertex with incident edges");
    verts_[v].alive = false;
    --alive_vertices_;
}

void MultiGraph::remove_edge(EdgeId e) {
    if (!edge_alive(e)) throw Error("removing dead edge");
    detach(e);
    edges_[e].alive = false;
    --alive_edges_;
}

void MultiGraph::attach(EdgeId e) {
    for (VertexId x : {edges_[e].u, edges_[e].v}) {
        auto& inc = verts_[x].inc;
        inc.insert(std::upper_bound(inc.begin(), inc.end(), e), e);
    }
}

void MultiGraph::detach(EdgeId e) {
    for (VertexId x : {edges_[e].u, edges_[e].v}) {
        auto& inc = verts_[x].inc;
        inc.erase(std::find(inc.begin(), inc.end(), e));
    }
}

std::vector<VertexId> MultiGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(alive_vertices_);
    for (int i = 0; i < (int)verts_.size(); ++i)
        if (verts_[i].alive) out.push_back(i);
    return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(alive_edges_);
    for (int i = 0; i < (int)edges_.size(); ++i)
        if (edges_[i].alive) out.push_back(i);
    return out;
}

bool MultiGraph::adjacent(VertexId u, VertexId v) const {
    for (EdgeId e : verts_[u].inc)
        if (other_end(e, u) == v) return true;
    return false;
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId u, VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId e : verts_[u].inc)
        if (other_end(e, u) == v) out.push_back(e);
    return out;
}

EdgeId MultiGraph::third_edge(VertexId v, EdgeId e1, EdgeId e2) const {
    EdgeId found = kInvalidId;
    for (EdgeId e : verts_[v].inc) {
        if (e == e1 || e == e2) continue;
        if (found != kInvalidId) return kInvalidId;
        found = e;
    }
    return found;
}

std::optional<Sides> two_coloring(const MultiGraph& g, std::vector<VertexId>* witness) {
    Sides side(g.vertex_capacity(), -1);
    std::vector<VertexId> parent(g.vertex_capacity(), kInvalidId);
    for (VertexId root : g.vertices()) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (side[w] == -1) {
                    side[w] = (int8_t)(1 - side[v]);
                    parent[w] = v;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    if (witness) {
                        // Odd closed walk: v's root path, edge v-w, w's path back.
                        std::vector<VertexId> pv, pw;
                        for (VertexId x = v; x != kInvalidId; x = parent[x]) pv.push_back(x);
                        for (VertexId x = w; x != kInvalidId; x = parent[x]) pw.push_back(x);
                        std::reverse(pv.begin(), pv.end());
                        witness->assign(pv.begin(), pv.end());
                        witness->insert(witness->end(), pw.begin(), pw.end());
                    }
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_cubic(const MultiGraph& g) { return is_k_regular(g, 3); }

bool is_k_regular(const MultiGraph& g, int k) {
    for (VertexId v : g.vertices())
        if (g.degree(v) != k) return false;
    return true;
}

bool is_simple(const MultiGraph& g) {
    for (EdgeId e : g.edges())
        if (g.edges_between(g.edge_u(e), g.edge_v(e)).size() > 1) return false;
    return true;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId root : g.vertices()) {
        if (seen[root]) continue;
        std::vector<VertexId> comp;
        std::deque<VertexId> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const MultiGraph& g) {
    if (g.num_vertices() == 0) return true;
    return connected_components(g).size() == 1;
}

namespace {

bool component_is_k33(const MultiGraph& g, const std::vector<VertexId>& comp) {
    if (comp.size() != 6) return false;
    for (VertexId v : comp) {
        if (g.degree(v) != 3) return false;
        std::vector<VertexId> nb;
        for (EdgeId e : g.incident(v)) nb.push_back(g.other_end(e, v));
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;  // parallel
    }
    // 6-vertex simple cubic graph is K3,3 iff bipartite; triangle-free suffices
    // here because the only other simple cubic graph on 6 vertices (K4 minus a
    // matching variants, prism, Mobius-Kantor K3,3 twist) contains triangles.
    for (VertexId v : comp)
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            for (EdgeId e2 : g.incident(w)) {
                VertexId x = g.other_end(e2, w);
                if (x != v && g.adjacent(x, v)) return false;
            }
        }
    return true;
}

}  // namespace

bool in_k33_component(const MultiGraph& g, VertexId v) {
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{v};
    seen[v] = 1;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        comp.push_back(x);
        if (comp.size() > 6) return false;
        for (EdgeId e : g.incident(x)) {
            VertexId w = g.other_end(e, x);
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return component_is_k33(g, comp);
}

int count_k33_components(const MultiGraph& g) {
    int count = 0;
    for (const auto& comp : connected_components(g))
        if (component_is_k33(g, comp)) ++count;
    return count;
}

std::vector<Cycle> cycle_decomposition(const MultiGraph& g, const EdgeSet& f) {
    // Collect the two selected edges per vertex, checking 2-regularity.
    std::vector<std::array<EdgeId, 2>> sel(g.vertex_capacity(), {kInvalidId, kInvalidId});
    for (VertexId v : g.vertices()) {
        int d = 0;
        for (EdgeId e : g.incident(v)) {
            if (!f.contains(e)) continue;
            if (d < 2) sel[v][d] = e;
            ++d;
        }
        if (d != 2) throw NotTwoRegularError(v, d);
    }

    std::vector<char> used(g.edge_capacity(), 0);
    std::vector<Cycle> cycles;
    for (VertexId start : g.vertices()) {
        if (used[sel[start][0]] && used[sel[start][1]]) continue;
        Cycle c;
        // First step: toward the smaller neighbor id, smaller edge id on ties.
        EdgeId first = sel[start][0];
        {
            VertexId n0 = g.other_end(sel[start][0], start);
            VertexId n1 = g.other_end(sel[start][1], start);
            if (n1 < n0) first = sel[start][1];
        }
        VertexId v = start;
        EdgeId e = first;
        do {
            c.vertices.push_back(v);
            c.edges.push_back(e);
            used[e] = 1;
            VertexId w = g.other_end(e, v);
            e = (sel[w][0] == e) ? sel[w][1] : sel[w][0];
            v = w;
        } while (v != start);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

}  // namespace bigcycle
