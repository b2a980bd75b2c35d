#pragma once

#include <vector>

#include "safenum/graph.hpp"

namespace safenum {

/// 1-based cell address in a rook graph: row in 1..m, column in 1..n.
struct ProductCoord {
    int row = 1;
    int col = 1;
    friend bool operator==(const ProductCoord&, const ProductCoord&) = default;
};

/// Cartesian product of two graphs. Vertices are the pairs (a, b), flattened
/// as a * |V(h)| + b; (a1, b1) is adjacent to (a2, b2) iff a1 == a2 and
/// b1 ~ b2 in h, or b1 == b2 and a1 ~ a2 in g.
Graph cartesian_product(const Graph& g, const Graph& h);

/// The Cartesian product of the complete graphs K_m and K_n — the m-by-n rook
/// graph — together with the 1-based coordinate bijection. Cell (i, j) maps to
/// flat index (i-1)*n + (j-1); two cells are adjacent iff they share a row or
/// a column.
class ProductGraph {
public:
    ProductGraph(int m, int n);  // m, n >= 1

    int rows() const { return m_; }
    int cols() const { return n_; }
    const Graph& graph() const { return graph_; }

    /// Flat index of a cell; rejects out-of-range coordinates.
    int index_of(ProductCoord c) const;

    /// Cell of a flat index; rejects out-of-range indices.
    ProductCoord coord_of(int v) const;

    /// The vertex set holding the given cells.
    VertexSet set_of(const std::vector<ProductCoord>& cells) const;

private:
    int m_ = 0;
    int n_ = 0;
    Graph graph_;
};

} // namespace safenum
