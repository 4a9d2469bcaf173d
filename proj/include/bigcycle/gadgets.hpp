// The gadget catalog: square configurations S1-S3 and hexagon configurations
// H1-H6, their replacements, detection, compression, structural expansion and
// the 2-factor rewiring case tables.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigcycle/graph.hpp"
#include "bigcycle/matching.hpp"

namespace bigcycle {

enum class GadgetKind { S1, S2, S3, H1, H2, H3, H4, H5, H6 };

const char* kind_name(GadgetKind k);

struct OccurrenceStaleError : Error {
    using Error::Error;
};
struct RecordMismatchError : Error {
    using Error::Error;
};
struct UnknownCaseError : Error {
    using Error::Error;
};

// How a configuration is replaced.
enum class ReplacementShape {
    TwoAdjacentSV,  // S'1, H'4: two super-vertices joined by an edge
    OneSV,          // S'2, H'5: one super-vertex
    SuperEdge,      // S'3: retained outer vertices joined by a new edge
    TwoFreeSV,      // H'1, H'2: two non-adjacent super-vertices
    Dumbbells,      // H'3, H'6: stub-pair vertices joined by doubled edges
};

struct GadgetTemplate {
    GadgetKind kind;
    int num_internal;
    std::vector<const char*> role_names;
    std::vector<std::pair<int, int>> internal_edges;  // role pairs
    std::vector<int> stub_owner;                      // per slot (0-based; label = slot+1)
    ReplacementShape shape;
    std::vector<std::vector<int>> sv_slots;             // per super-vertex: its slots
    std::vector<std::pair<int, int>> dumbbell_slots;    // per dumbbell: (slotA, slotB)
    std::vector<std::vector<int>> automorphisms;        // generator role permutations
    int num_slots() const { return (int)stub_owner.size(); }
    int slot_of_role(int role) const;
    // Slot permutation induced by a role permutation.
    std::vector<int> slot_perm(const std::vector<int>& role_perm) const;
    // Index of internal edge with the given role endpoints.
    int edge_index(int r1, int r2) const;
};

const GadgetTemplate& gadget_template(GadgetKind kind);

// A concrete embedding of a template.
struct Occurrence {
    GadgetKind kind;
    std::vector<VertexId> internal;       // by role index
    std::vector<EdgeId> internal_edges;   // parallel to template internal_edges
    std::vector<EdgeId> stub_edges;       // per slot
    std::vector<VertexId> stub_external;  // per slot (S3: the retained A, B)
    std::vector<VertexId> sorted_internal() const;
};

// One log entry per gadget replacement; replaying it inverts the compression.
struct CompressionRecord {
    int index = -1;
    GadgetKind kind;
    // Snapshot of the removed subgraph.
    std::vector<VertexId> internal;             // by role
    std::vector<Provenance> internal_prov;      // by role
    std::vector<EdgeId> internal_edge_ids;      // parallel to template edges
    std::vector<char> internal_edge_organic;
    // Boundary: per slot, the external endpoint and the stub edge before and
    // after compression. For S3 the "stub" edges are e-A and f-B and both
    // post ids equal the super-edge.
    std::vector<VertexId> boundary_external;
    std::vector<EdgeId> boundary_pre;
    std::vector<char> boundary_pre_organic;
    std::vector<EdgeId> boundary_post;
    // Created gadget elements.
    std::vector<VertexId> created_vertices;  // super-vertices or dumbbell vertices
    std::vector<EdgeId> created_edges;       // sv-sv edge / super-edge / doubled pairs
};

// The way the current 2-factor interacts with one gadget instance.
struct FState {
    std::vector<int> used_slots;                  // sorted, 0-based
    bool internal_edge_used = false;              // S'1/H'4 joining edge, S'3 super-edge
    std::vector<std::pair<int, int>> pairing;     // external arcs between used slots
};

// Canonical form: pairs sorted internally and the list sorted.
void canonicalize_pairing(std::vector<std::pair<int, int>>& pairing);

struct RewireOutcome {
    std::string case_id;
    bool may_introduce_six_cycle = false;
    // Internal template edge indexes selected into the 2-factor.
    std::vector<int> completion_edge_indexes;
    // Outcome formula: per output cycle, the arc indexes (into the canonical
    // pairing) it absorbs plus a constant edge count.
    std::vector<std::vector<int>> out_cycle_arcs;
    std::vector<int> out_cycle_consts;
};

// Case-table lookup. Throws UnknownCaseError for fstates the catalog deems
// impossible.
RewireOutcome rewire_two_factor(GadgetKind kind, const FState& fstate);

// All case-table entries after automorphism closure (for the consistency
// oracle and tests).
struct RewireEntry {
    GadgetKind kind;
    std::vector<int> used_slots;
    bool internal_edge_used;
    std::vector<std::pair<int, int>> pairing;
    RewireOutcome outcome;
    // Catalog cases that map onto this entry under template automorphisms.
    std::vector<std::string> alias_case_ids;
};
const std::vector<RewireEntry>& rewire_table();

// Detection -------------------------------------------------------------

// Highest-priority square occurrence (S3 > S2 > S1), skipping 4-cycles inside
// K3,3 components and degenerate squares through doubled-edge gadget pairs.
// Lexicographically smallest sorted internal tuple within a priority class.
std::optional<Occurrence> find_square_occurrence(const MultiGraph& g);

// Highest-priority organic H occurrence (H6 > ... > H1); same tie-break.
std::optional<Occurrence> find_h_occurrence(const MultiGraph& g);

// Compression / expansion ------------------------------------------------

// Replaces the occurrence by its gadget. Throws OccurrenceStaleError if the
// occurrence no longer matches g.
CompressionRecord compress(MultiGraph& g, const Occurrence& occ, int record_index);

// Removes the gadget elements and reinstates the recorded subgraph with its
// original ids.
void expand_structure(MultiGraph& g, const CompressionRecord& rec);

// Reads the fstate of rec's gadget out of the current 2-factor.
FState read_fstate(const MultiGraph& g, const CompressionRecord& rec, const TwoFactor& f);

// Applies one full expansion step to f: removes gadget edges from f, swaps
// used post-stub edges for their pre ids, inserts the case-table completion.
// Must be called after expand_structure. Returns the outcome used.
RewireOutcome apply_expansion(MultiGraph& g, const CompressionRecord& rec, TwoFactor& f,
                              const FState& fstate);

// 2-factor services -------------------------------------------------------

// A length-6 cycle of f whose vertices and edges are all organic, skipping
// K3,3 components (their 6-cycles stay). Smallest starting vertex first.
std::optional<Cycle> has_organic_six_cycle(const MultiGraph& g, const TwoFactor& f);

// Rewires the neighborhood of an organic 6-cycle c1 just introduced by an
// H'1 expansion. Returns true if f was updated (one fewer cycle).
bool local_improvement(const MultiGraph& g, TwoFactor& f, const Cycle& c1);

}  // namespace bigcycle
