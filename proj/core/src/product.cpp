#include "safenum/product.hpp"

#include <string>

#include "safenum/error.hpp"

namespace safenum {

Graph cartesian_product(const Graph& g, const Graph& h) {
    const long long order = static_cast<long long>(g.order()) * h.order();
    if (order > 1'000'000)
        throw invalid_input_error("product order too large");
    Graph out(static_cast<int>(order));
    const int hn = h.order();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < hn; ++b) {
            const int v = a * hn + b;
            // same first factor, edge in the second
            for (int b2 : h.neighbors(b))
                if (b2 > b) out.add_edge(v, a * hn + b2);
            // same second factor, edge in the first
            for (int a2 : g.neighbors(a))
                if (a2 > a) out.add_edge(v, a2 * hn + b);
        }
    return out;
}

namespace {

Graph make_rook(int m, int n) {
    if (m < 1 || n < 1) throw invalid_input_error("product sides must be at least 1");
    return cartesian_product(Graph::complete(m), Graph::complete(n));
}

}  // namespace

ProductGraph::ProductGraph(int m, int n) : m_(m), n_(n), graph_(make_rook(m, n)) {}

int ProductGraph::index_of(ProductCoord c) const {
    if (c.row < 1 || c.row > m_ || c.col < 1 || c.col > n_)
        throw invalid_input_error("cell (" + std::to_string(c.row) + "," +
                                  std::to_string(c.col) + ") outside the " + std::to_string(m_) +
                                  "x" + std::to_string(n_) + " grid");
    return (c.row - 1) * n_ + (c.col - 1);
}

ProductCoord ProductGraph::coord_of(int v) const {
    if (v < 0 || v >= m_ * n_) throw invalid_input_error("flat index outside the grid");
    return {v / n_ + 1, v % n_ + 1};
}

VertexSet ProductGraph::set_of(const std::vector<ProductCoord>& cells) const {
    std::vector<int> members;
    members.reserve(cells.size());
    for (ProductCoord c : cells) members.push_back(index_of(c));
    return VertexSet(m_ * n_, std::move(members));
}

} // namespace safenum
