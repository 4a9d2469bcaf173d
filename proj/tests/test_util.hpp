// Shared graph builders for the test suites.
#pragma once

#include <vector>

#include "bigcycle/graph.hpp"

namespace bigcycle::testutil {

inline MultiGraph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (auto [u, v] : edges) g.add_edge(u, v, true);
    return g;
}

// Complete bipartite K3,3 with sides {0,1,2} and {3,4,5}.
inline MultiGraph k33() {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
    return from_pairs(6, es);
}

// The 3-cube: vertices are bit masks 0..7, edges flip one bit.
inline MultiGraph q3() {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 8; ++v)
        for (int b : {1, 2, 4})
            if (v < (v ^ b)) es.emplace_back(v, v ^ b);
    return from_pairs(8, es);
}

inline MultiGraph k44() {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) es.emplace_back(u, v);
    return from_pairs(8, es);
}

}  // namespace bigcycle::testutil
