#pragma once

#include <utility>
#include <vector>

#include "safenum/graph.hpp"
#include "safenum/product.hpp"

namespace safenum {

/// Outcome of checking a candidate safe set S in a connected graph G.
///
/// S is a safe set when every component C of G[S] is at least as large as
/// every component D of G - S joined to C by an edge; it is a connected safe
/// set when additionally G[S] has a single component.
struct SafetyReport {
    bool is_safe = false;
    bool is_connected_safe = false;
    std::vector<VertexSet> components_of_set;
    std::vector<VertexSet> components_of_rest;
    /// Every pair (c, r) such that component c of G[S] has an edge to the
    /// strictly larger component r of G - S; exhaustive, in (c, r) order.
    std::vector<std::pair<int, int>> violations;
};

/// Checks the safe-set conditions for s in g. g must be connected and s a
/// nonempty subset of its vertices (s may be all of them).
SafetyReport verify_safe_set(const Graph& g, const VertexSet& s);

/// Row and column labels (1-based) covered by each component of a rook graph
/// minus a removed set. Components are numbered by (smallest row, smallest
/// column); distinct components never share a row label or a column label.
struct ComponentProjection {
    std::vector<std::vector<int>> rows;  ///< rows[t]: sorted row labels of component t
    std::vector<std::vector<int>> cols;  ///< cols[t]: sorted column labels of component t
    int count() const { return static_cast<int>(rows.size()); }
};

/// Projects every component of p.graph() minus s onto its row and column
/// labels. s must leave at least one vertex; if removal does not disconnect
/// the rest, the projection has a single component.
ComponentProjection component_projection(const ProductGraph& p, const VertexSet& s);

/// Structural criterion on a removed set s of a rook graph: true when the
/// component projections leave some row label uncovered, or some column label
/// uncovered, or removal leaves at least three components. Whenever the
/// criterion holds for a vertex cut s, the subgraph induced by s is connected.
bool cut_connectivity_criterion(const ProductGraph& p, const VertexSet& s);

} // namespace safenum
