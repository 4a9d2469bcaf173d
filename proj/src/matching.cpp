#include "bigcycle/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace bigcycle {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp over the alive vertices. match[v] = edge id or kInvalidId.
// Textbook phase structure: BFS layers the exposed left vertices, tracking
// the distance of the nearest free right vertex; DFS follows the layering
// exactly and poisons failed left vertices.
struct HopcroftKarp {
    const MultiGraph& g;
    const Sides& sides;
    std::vector<VertexId> left;
    std::vector<EdgeId> match;  // per vertex
    std::vector<int> dist;
    int dist_free = kInf;

    explicit HopcroftKarp(const MultiGraph& gr, const Sides& s) : g(gr), sides(s) {
        match.assign(g.vertex_capacity(), kInvalidId);
        dist.assign(g.vertex_capacity(), 0);
        for (VertexId v : g.vertices())
            if (sides[v] == 0) left.push_back(v);
    }

    bool bfs() {
        std::deque<VertexId> queue;
        dist_free = kInf;
        for (VertexId u : left) {
            if (match[u] == kInvalidId) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = kInf;
            }
        }
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (dist[u] >= dist_free) continue;
            for (EdgeId e : g.incident(u)) {
                VertexId w = g.other_end(e, u);
                if (match[w] == kInvalidId) {
                    dist_free = std::min(dist_free, dist[u] + 1);
                } else {
                    VertexId u2 = g.other_end(match[w], w);
                    if (dist[u2] == kInf) {
                        dist[u2] = dist[u] + 1;
                        queue.push_back(u2);
                    }
                }
            }
        }
        return dist_free != kInf;
    }

    bool dfs(VertexId u) {
        for (EdgeId e : g.incident(u)) {
            VertexId w = g.other_end(e, u);
            if (match[w] == kInvalidId) {
                if (dist[u] + 1 != dist_free) continue;
                match[w] = e;
                match[u] = e;
                return true;
            }
            VertexId u2 = g.other_end(match[w], w);
            if (dist[u2] == dist[u] + 1 && dfs(u2)) {
                match[w] = e;
                match[u] = e;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    void run() {
        while (bfs()) {
            for (VertexId u : left)
                if (match[u] == kInvalidId) dfs(u);
        }
    }
};

}  // namespace

Matching perfect_matching(const MultiGraph& g, const Sides& sides) {
    HopcroftKarp hk(g, sides);
    hk.run();
    Matching m;
    for (VertexId u : hk.left) {
        if (hk.match[u] == kInvalidId) {
            // Hall witness: L vertices reachable from an exposed one by
            // alternating paths.
            std::vector<VertexId> witness;
            std::vector<char> seenL(g.vertex_capacity(), 0), seenR(g.vertex_capacity(), 0);
            std::deque<VertexId> queue{u};
            seenL[u] = 1;
            while (!queue.empty()) {
                VertexId x = queue.front();
                queue.pop_front();
                witness.push_back(x);
                for (EdgeId e : g.incident(x)) {
                    VertexId w = g.other_end(e, x);
                    if (seenR[w]) continue;
                    seenR[w] = 1;
                    if (hk.match[w] != kInvalidId) {
                        VertexId x2 = g.other_end(hk.match[w], w);
                        if (!seenL[x2]) {
                            seenL[x2] = 1;
                            queue.push_back(x2);
                        }
                    }
                }
            }
            std::sort(witness.begin(), witness.end());
            throw NoPerfectMatchingError(std::move(witness));
        }
        m.push_back(hk.match[u]);
    }
    std::sort(m.begin(), m.end());
    return m;
}

std::array<Matching, 3> decompose_cubic(const MultiGraph& g, const Sides& sides) {
    std::array<Matching, 3> out;
    out[0] = perfect_matching(g, sides);

    EdgeSet rest;
    rest.ensure(g.edge_capacity());
    for (EdgeId e : g.edges()) rest.insert(e);
    for (EdgeId e : out[0]) rest.erase(e);

    for (const Cycle& c : cycle_decomposition(g, rest)) {
        // Anchor: position of the cycle's lowest L-side vertex; the edge
        // leaving it in traversal order starts the M2 alternation.
        int anchor = -1;
        for (int i = 0; i < (int)c.vertices.size(); ++i) {
            VertexId v = c.vertices[i];
            if (sides[v] != 0) continue;
            if (anchor == -1 || v < c.vertices[anchor]) anchor = i;
        }
        if (anchor == -1) throw Error("cycle without L-side vertex");
        int len = c.length();
        for (int t = 0; t < len; ++t)
            out[t % 2 == 0 ? 1 : 2].push_back(c.edges[(anchor + t) % len]);
    }
    std::sort(out[1].begin(), out[1].end());
    std::sort(out[2].begin(), out[2].end());
    return out;
}

std::vector<Matching> peel_matchings(const MultiGraph& g, int k, const Sides& sides) {
    MultiGraph work = g;
    std::vector<Matching> out;
    for (int i = 0; i < k; ++i) {
        Matching m = perfect_matching(work, sides);
        for (EdgeId e : m) work.remove_edge(e);
        out.push_back(std::move(m));
    }
    return out;
}

TwoFactor choose_two_factor(const MultiGraph& g, const std::array<Matching, 3>& ms,
                            const EdgeSet& s3_edges) {
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (EdgeId e : ms[i])
            if (s3_edges.contains(e)) ++counts[i];
    int excluded = 0;
    for (int i = 1; i < 3; ++i)
        if (counts[i] <= counts[excluded]) excluded = i;  // ties: highest index

    TwoFactor f;
    f.edges.ensure(g.edge_capacity());
    for (int i = 0; i < 3; ++i) {
        if (i == excluded) continue;
        for (EdgeId e : ms[i]) f.edges.insert(e);
    }
    f.refresh(g);
    return f;
}

}  // namespace bigcycle
