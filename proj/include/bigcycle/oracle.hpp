// Brute-force ground truth for small instances and structural validators for
// pipeline outputs.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bigcycle/gadgets.hpp"
#include "bigcycle/graph.hpp"
#include "bigcycle/matching.hpp"
#include "bigcycle/pipeline.hpp"

namespace bigcycle {

struct BudgetExceededError : Error {
    using Error::Error;
};

struct OracleReport {
    int min_cycles = 0;
    std::vector<EdgeId> optimal_two_factor;
    long long matchings_enumerated = 0;
};

// Every perfect matching exactly once, by backtracking over vertices in id
// order. Throws BudgetExceededError for |V| > 40.
void enumerate_perfect_matchings(const MultiGraph& g,
                                 const std::function<void(const Matching&)>& visit);

// Minimum cycle count over all 2-factors, via complement-of-matching
// enumeration (valid for cubic graphs).
OracleReport min_cycles_two_factor(const MultiGraph& g);

struct Violation {
    bool ok = true;
    std::string message;
};

Violation validate_two_factor(const MultiGraph& g, const EdgeSet& f);

// Checks (a) multiset edges exist in g0, (b) all degrees even, (c) connected
// and spanning, (d) edge_count = n + 2(cycles - 1).
Violation validate_eulerian(const MultiGraph& g0, const EulerianResult& res);

// All internal edge subsets giving every internal vertex degree two given the
// fstate's used stubs. Cross-checks the hand-encoded case tables.
std::vector<std::vector<int>> completion_solver(GadgetKind kind, const FState& fstate);

}  // namespace bigcycle
