#pragma once

#include <vector>

#include "safenum/vertex_set.hpp"

namespace safenum {

/// Simple undirected graph on vertices 0..order-1 with sorted adjacency lists.
/// No self-loops, no parallel edges.
class Graph {
public:
    /// Edgeless graph; order must be >= 1.
    explicit Graph(int order);

    static Graph complete(int order);
    static Graph path(int order);
    static Graph cycle(int order);  // order >= 3
    static Graph star(int leaves);  // vertex 0 is the centre; leaves >= 0

    int order() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return num_edges_; }

    /// Adds an undirected edge. Self-loops and out-of-range endpoints are
    /// rejected; adding an existing edge is a no-op.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    /// Neighbours of v in ascending order.
    const std::vector<int>& neighbors(int v) const;

private:
    std::vector<std::vector<int>> adj_;
    int num_edges_ = 0;
};

/// Connected components of the subgraph induced by `within`, ordered by
/// smallest member index. Their union is exactly `within`.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

/// True iff the subgraph induced by `within` is connected. The empty set is
/// not connected.
bool is_connected(const Graph& g, const VertexSet& within);

/// True iff the whole graph is connected.
bool is_connected(const Graph& g);

/// True iff some edge joins `a` and `b`. The two sets must be disjoint.
bool has_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b);

} // namespace safenum
