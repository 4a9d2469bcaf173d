#include "bigcycle/instance_io.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace bigcycle {

MultiGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    long long edges_read = 0;
    MultiGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "expected 'n m'");
            for (long long i = 0; i < n; ++i) g.add_vertex();
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "index out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        ++edges_read;
        if (edges_read > m) throw ParseError(lineno, "more edges than declared");
        g.add_edge((VertexId)u, (VertexId)v, true);
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (edges_read != m) throw ParseError(lineno, "fewer edges than declared");
    return g;
}

std::string write_graph(const MultiGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (EdgeId e : g.edges()) {
        VertexId u = g.edge_u(e), v = g.edge_v(e);
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    std::ostringstream out;
    out << g.num_vertices() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
    return out.str();
}

MultiGraph generate(const GenSpec& spec) {
    if (spec.m <= 0 || spec.k < 1 || spec.k > spec.m)
        throw InputInvalidError("generator spec invalid");
    int k = spec.model == GenModel::CubicBipartite ? 3 : spec.k;
    std::mt19937_64 rng(spec.seed);

    for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        // Each bijection is resampled until it avoids all earlier ones
        // pointwise, so the union is simple.
        std::vector<std::vector<int>> perms;
        bool simple = true;
        for (int i = 0; i < k && simple; ++i) {
            std::vector<int> p(spec.m);
            std::iota(p.begin(), p.end(), 0);
            bool ok = false;
            for (int tries = 0; tries < spec.max_retries; ++tries) {
                std::shuffle(p.begin(), p.end(), rng);
                ok = true;
                for (const auto& q : perms)
                    for (int x = 0; x < spec.m && ok; ++x)
                        if (p[x] == q[x]) ok = false;
                if (ok) break;
            }
            if (!ok) simple = false;
            perms.push_back(p);
        }
        if (!simple) continue;
        MultiGraph g;
        for (int i = 0; i < 2 * spec.m; ++i) g.add_vertex();
        for (int i = 0; i < k; ++i)
            for (int x = 0; x < spec.m; ++x) g.add_edge(x, spec.m + perms[i][x], true);
        if (!is_connected(g)) continue;
        return g;
    }
    throw RetriesExhaustedError("generator retries exhausted");
}

}  // namespace bigcycle
