#pragma once

#include <cstdint>

#include "safenum/graph.hpp"
#include "safenum/vertex_set.hpp"

namespace safenum {

/// Default upper bound on graph order accepted by the exhaustive search.
inline constexpr int kDefaultOracleCap = 20;

/// One exhaustive minimisation: the smallest safe set, found by checking
/// every vertex subset in cardinality-major, lexicographic-minor order and
/// returning the first that passes.
struct SearchResult {
    long long size = 0;
    VertexSet witness{0};
    std::uint64_t subsets_examined = 0;
};

/// Exhaustive minimum safe set of a connected graph; with require_connected,
/// minimum connected safe set. Refuses graphs larger than vertex_cap
/// (resource limit); the cap itself must lie in 1..63. Deterministic: the
/// witness is the lexicographically least passing subset of the smallest
/// passing cardinality.
SearchResult min_safe_set(const Graph& g, bool require_connected,
                          int vertex_cap = kDefaultOracleCap);

/// Both exhaustive minima for a graph, each with its first witness.
struct OracleResult {
    long long s_value = 0;   ///< safe number
    long long cs_value = 0;  ///< connected safe number
    VertexSet s_witness{0};
    VertexSet cs_witness{0};
    std::uint64_t subsets_examined = 0;  ///< total across both searches
};

OracleResult exhaustive_safe_numbers(const Graph& g, int vertex_cap = kDefaultOracleCap);

} // namespace safenum
