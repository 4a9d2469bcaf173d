// Edge-list file format, random instance generation, and construction of
// single-expansion fixtures for the expansion case tables.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bigcycle/gadgets.hpp"
#include "bigcycle/graph.hpp"
#include "bigcycle/matching.hpp"

namespace bigcycle {

struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string& reason)
        : Error("parse error at line " + std::to_string(ln) + ": " + reason), line(ln) {}
};
struct RetriesExhaustedError : Error {
    using Error::Error;
};
struct InvalidLengthsError : Error {
    using Error::Error;
};

// Header "n m", then m lines "u v" (0-based). '#' lines ignored. Duplicate
// lines encode parallel edges.
MultiGraph parse_graph(const std::string& text);
// Canonical form: edges sorted by (min endpoint, max endpoint), LF newlines.
std::string write_graph(const MultiGraph& g);

enum class GenModel { CubicBipartite, KRegularBipartite };

struct GenSpec {
    GenModel model = GenModel::CubicBipartite;
    int m = 0;  // side size; n = 2m
    int k = 3;
    uint64_t seed = 0;
    int max_retries = 2000;
};

// Union of k uniformly random L->R bijections; resampled until simple and
// connected. Deterministic given the seed.
MultiGraph generate(const GenSpec& spec);

// A compressed-state host graph that contains exactly one gadget with the
// prescribed fstate, ready for a single expansion step.
struct Fixture {
    std::string case_id;           // the catalog case this realizes
    std::string resolved_case_id;  // the table entry it maps to
    MultiGraph graph;
    TwoFactor factor;
    CompressionRecord record;
    std::vector<int> expected_cycles;   // lengths after expansion
    int scaffold_two_cycles = 0;        // filler 2-cycles present before and after
    bool expect_six_flag = false;
};

struct FixtureSpec {
    std::string case_id;
    std::vector<int> arc_lengths;  // external edges per pairing arc
};

// All case ids of the base tables with default legal arc lengths.
std::vector<FixtureSpec> fixture_catalog();

Fixture build_case_fixture(const std::string& case_id,
                               const std::vector<int>& arc_lengths);

// Same construction for an arbitrary table entry (closure orbits included).
Fixture build_entry_fixture(const RewireEntry& entry, const std::vector<int>& arc_lengths);

}  // namespace bigcycle
