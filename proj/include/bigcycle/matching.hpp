// Perfect matchings of bipartite multigraphs and the 2-factor selection rule
// used by the compression pipeline.
#pragma once

#include <array>
#include <vector>

#include "bigcycle/graph.hpp"

namespace bigcycle {

struct NoPerfectMatchingError : Error {
    std::vector<VertexId> hall_witness;  // L-side set whose neighborhood is too small
    explicit NoPerfectMatchingError(std::vector<VertexId> w)
        : Error("no perfect matching"), hall_witness(std::move(w)) {}
};

using Matching = std::vector<EdgeId>;  // sorted ascending

struct TwoFactor {
    EdgeSet edges;
    std::vector<Cycle> cycles;  // consistent with cycle_decomposition
    int cycle_count() const { return (int)cycles.size(); }
    void refresh(const MultiGraph& g) { cycles = cycle_decomposition(g, edges); }
};

// Hopcroft-Karp style augmenting search. Deterministic for a fixed graph:
// free vertices and adjacency are scanned in ascending id order.
Matching perfect_matching(const MultiGraph& g, const Sides& sides);

// M1 = perfect_matching; the 2-regular remainder decomposes into even cycles
// whose edges alternate into M2/M3. The edge leaving each cycle's lowest
// L-side vertex (in canonical traversal order) goes to M2.
std::array<Matching, 3> decompose_cubic(const MultiGraph& g, const Sides& sides);

// Peel k edge-disjoint perfect matchings off a k-regular bipartite graph.
std::vector<Matching> peel_matchings(const MultiGraph& g, int k, const Sides& sides);

// Union of the two matchings containing the most s3 super-edges, i.e. the
// matching with the fewest is excluded; ties exclude the highest index.
TwoFactor choose_two_factor(const MultiGraph& g, const std::array<Matching, 3>& ms,
                            const EdgeSet& s3_edges);

}  // namespace bigcycle
