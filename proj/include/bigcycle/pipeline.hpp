// Orchestration of the solve: compress until the 2-factor has no organic
// 6-cycles, expand LIFO with rewiring, extend with a doubled spanning tree.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bigcycle/gadgets.hpp"
#include "bigcycle/graph.hpp"
#include "bigcycle/matching.hpp"

namespace bigcycle {

struct NonterminatingCompressionError : Error {
    using Error::Error;
};
struct DisconnectedError : Error {
    using Error::Error;
};

struct CompressState {
    MultiGraph graph;
    std::vector<CompressionRecord> log;
    TwoFactor factor;   // valid in graph
    EdgeSet s3_edges;   // live S'3 super-edges
    int compressions = 0;
};

struct EulerianResult {
    // multiplicity[e] in {0,1,2} indexed by EdgeId of the input graph.
    std::vector<int8_t> multiplicity;
    int n = 0;
    int cycles = 0;
    long long edge_count = 0;
    double elapsed_ms = 0.0;
};

struct SolveReport {
    long long n = 0;
    int k = 3;
    long long cycles = 0;
    long long edge_count = 0;
    bool cycles_within_bound = false;  // cycles <= n/7 (k=3) resp. n/7 + n/(42(k-2))
    bool edges_within_bound = false;   // edge_count <= 9n/7 - 2 resp. corollary bound
    double elapsed_ms = 0.0;
};

struct PipelineOptions {
    std::ostream* trace = nullptr;  // JSON lines per compress/expand step
    bool debug_checks = false;      // per-step structural assertions
};

// Reads BIGCYCLE_DEBUG=1 into debug_checks.
PipelineOptions default_options();

// COMPRESS: squares to a fixpoint, then H-compressions until the chosen
// 2-factor has no organic 6-cycle. Stops immediately on graphs with at most
// six vertices (K3,3 guard).
CompressState compress_phase(const MultiGraph& g0, const PipelineOptions& opt = {});

// EXPAND: pops the log LIFO, rewiring the 2-factor per case table and running
// the local improvement after flagged H1 expansions. Returns the 2-factor on
// the original graph.
TwoFactor expand_phase(CompressState& state, const PipelineOptions& opt = {});

// DOUBLETREE: contract the cycles of f, take a BFS spanning tree, add its
// edges twice.
EulerianResult doubletree(const MultiGraph& g0, const TwoFactor& f);

// Full solve for connected cubic bipartite simple graphs.
std::pair<EulerianResult, SolveReport> bigcycle(const MultiGraph& g0,
                                                const PipelineOptions& opt = {});

// Closed walk using every multiset edge exactly its multiplicity.
std::vector<VertexId> euler_circuit(const MultiGraph& g0, const EulerianResult& res);

// CUBIC: peel k matchings, keep (V, M1 u M2 u Mi) with the fewest K3,3
// components (first strict minimizer).
MultiGraph cubic_subgraph(const MultiGraph& g, int k, const Sides& sides);

// k >= 4: solve per component of the cubic subgraph, union the 2-factors,
// doubletree over the original graph.
std::pair<EulerianResult, SolveReport> solve_k_regular(const MultiGraph& g, int k,
                                                       const PipelineOptions& opt = {});

}  // namespace bigcycle
