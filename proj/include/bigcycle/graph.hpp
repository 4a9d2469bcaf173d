// Undirected multigraph with stable vertex/edge identities, bipartition and
// cycle services. Identity slots survive removal so that gadget expansion can
// reinstate the exact ids recorded at compression time.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigcycle {

using VertexId = int;
using EdgeId = int;
inline constexpr int kInvalidId = -1;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotTwoRegularError : Error {
    VertexId vertex;
    int degree;
    NotTwoRegularError(VertexId v, int d)
        : Error("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                " in claimed 2-factor"),
          vertex(v), degree(d) {}
};

struct InputInvalidError : Error {
    using Error::Error;
};

// Vertices of the input graph are organic; vertices created by a compression
// carry the index of the record that made them plus their template role.
struct Provenance {
    int record = -1;
    int role = -1;
    bool organic() const { return record < 0; }
};

struct Cycle {
    std::vector<VertexId> vertices;  // closed: vertices[i] -- vertices[i+1], last -- first
    std::vector<EdgeId> edges;       // edges[i] joins vertices[i], vertices[(i+1)%len]
    int length() const { return static_cast<int>(edges.size()); }
};

class MultiGraph {
public:
    MultiGraph() = default;

    VertexId add_vertex(Provenance prov = {});
    void add_vertex_at(VertexId id, Provenance prov);
    // Reserves an id slot without creating a live vertex (used when
    // synthesizing compression records for fixtures).
    VertexId reserve_vertex_id();
    EdgeId add_edge(VertexId u, VertexId v, bool organic = false);
    void add_edge_at(EdgeId id, VertexId u, VertexId v, bool organic);
    EdgeId reserve_edge_id();
    void remove_vertex(VertexId v);  // degree must be zero
    void remove_edge(EdgeId e);

    bool vertex_alive(VertexId v) const { return v >= 0 && v < (int)verts_.size() && verts_[v].alive; }
    bool edge_alive(EdgeId e) const { return e >= 0 && e < (int)edges_.size() && edges_[e].alive; }

    int num_vertices() const { return alive_vertices_; }
    int num_edges() const { return alive_edges_; }
    int vertex_capacity() const { return (int)verts_.size(); }
    int edge_capacity() const { return (int)edges_.size(); }

    std::vector<VertexId> vertices() const;  // alive, ascending id
    std::vector<EdgeId> edges() const;       // alive, ascending id

    int degree(VertexId v) const { return (int)verts_[v].inc.size(); }
    // Incident edge ids, ascending.
    const std::vector<EdgeId>& incident(VertexId v) const { return verts_[v].inc; }
    VertexId edge_u(EdgeId e) const { return edges_[e].u; }
    VertexId edge_v(EdgeId e) const { return edges_[e].v; }
    VertexId other_end(EdgeId e, VertexId v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }
    bool edge_organic(EdgeId e) const { return edges_[e].organic; }
    const Provenance& provenance(VertexId v) const { return verts_[v].prov; }
    bool organic(VertexId v) const { return verts_[v].prov.organic(); }

    bool adjacent(VertexId u, VertexId v) const;
    // All edges joining u and v, ascending id.
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
    // The unique incident edge not in `exclude`; kInvalidId if none or ambiguous.
    EdgeId third_edge(VertexId v, EdgeId e1, EdgeId e2) const;

private:
    struct VertexSlot {
        bool alive = false;
        Provenance prov;
        std::vector<EdgeId> inc;  // kept sorted ascending
    };
    struct EdgeSlot {
        bool alive = false;
        VertexId u = kInvalidId, v = kInvalidId;
        bool organic = false;
    };
    std::vector<VertexSlot> verts_;
    std::vector<EdgeSlot> edges_;
    int alive_vertices_ = 0;
    int alive_edges_ = 0;

    void attach(EdgeId e);
    void detach(EdgeId e);
};

// Side assignment for a bipartition: 0 = L, 1 = R, -1 = dead slot.
using Sides = std::vector<int8_t>;

// Deterministic 2-coloring: BFS from the lowest vertex id of each component,
// root colored L. On failure returns nullopt and, if requested, an odd closed
// walk as witness.
std::optional<Sides> two_coloring(const MultiGraph& g,
                                  std::vector<VertexId>* odd_walk_witness = nullptr);

bool is_cubic(const MultiGraph& g);
bool is_k_regular(const MultiGraph& g, int k);
bool is_simple(const MultiGraph& g);

// Partition of alive vertices into components, each sorted ascending, lists
// ordered by smallest contained id.
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

// True iff the component containing v is a K3,3 (6 vertices, simple, cubic,
// bipartite -- the unique such graph).
bool in_k33_component(const MultiGraph& g, VertexId v);

// Number of connected components that are K3,3s.
int count_k33_components(const MultiGraph& g);

// Edge subset indexed by EdgeId, the representation 2-factors live in.
struct EdgeSet {
    std::vector<char> has;
    int count = 0;
    void ensure(int cap) { if ((int)has.size() < cap) has.resize(cap, 0); }
    bool contains(EdgeId e) const { return e >= 0 && e < (int)has.size() && has[e]; }
    void insert(EdgeId e) { ensure(e + 1); if (!has[e]) { has[e] = 1; ++count; } }
    void erase(EdgeId e) { if (contains(e)) { has[e] = 0; --count; } }
};

// Decompose an edge set in which every alive vertex has exactly two incident
// selected edges. Deterministic: each cycle starts at its smallest vertex and
// first steps toward the smaller-id neighbor (smaller edge id on ties).
// Throws NotTwoRegularError if the precondition fails.
std::vector<Cycle> cycle_decomposition(const MultiGraph& g, const EdgeSet& f);

}  // namespace bigcycle
