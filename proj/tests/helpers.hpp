#pragma once

// Shared test utilities. The rook-graph builder here works straight from the
// adjacency rule, independent of the library's own product construction, so
// tests that use it cross-check rather than echo the implementation.

#include <random>
#include <vector>

#include "safenum/graph.hpp"
#include "safenum/vertex_set.hpp"

namespace testutil {

/// K_m box K_n built directly from the rule: cells (i, j) with 1 <= i <= m,
/// 1 <= j <= n, flat index (i-1)*n + (j-1); edges between cells sharing a row
/// or a column.
inline safenum::Graph rook_by_rule(int m, int n) {
    safenum::Graph g(m * n);
    auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            for (int j2 = j + 1; j2 <= n; ++j2) g.add_edge(idx(i, j), idx(i, j2));
            for (int i2 = i + 1; i2 <= m; ++i2) g.add_edge(idx(i, j), idx(i2, j));
        }
    return g;
}

/// Connected random graph: a random spanning tree plus random extra edges.
inline safenum::Graph random_connected_graph(std::mt19937& rng, int min_order, int max_order) {
    std::uniform_int_distribution<int> order_dist(min_order, max_order);
    const int n = order_dist(rng);
    safenum::Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        g.add_edge(parent(rng), v);
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = 0.15 + 0.5 * unit(rng);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

/// Random subset of {0, ..., universe-1}; each element kept with probability p.
/// With proper_nonempty, resamples until the set is neither empty nor full.
inline safenum::VertexSet random_subset(std::mt19937& rng, int universe, double p,
                                        bool proper_nonempty) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (true) {
        std::vector<int> members;
        for (int v = 0; v < universe; ++v)
            if (unit(rng) < p) members.push_back(v);
        if (proper_nonempty && (members.empty() || static_cast<int>(members.size()) == universe))
            continue;
        return safenum::VertexSet(universe, std::move(members));
    }
}

} // namespace testutil
