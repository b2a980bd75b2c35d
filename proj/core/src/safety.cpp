#include "safenum/safety.hpp"

#include <algorithm>
#include <utility>

#include "safenum/error.hpp"

namespace safenum {

SafetyReport verify_safe_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match the graph order");
    if (s.empty()) throw invalid_input_error("a safe set must be nonempty");
    if (!is_connected(g)) throw unsupported_input_error("the host graph must be connected");

    SafetyReport report;
    report.components_of_set = components(g, s);
    report.components_of_rest = components(g, s.complement());
    for (std::size_t c = 0; c < report.components_of_set.size(); ++c)
        for (std::size_t r = 0; r < report.components_of_rest.size(); ++r) {
            const VertexSet& inside = report.components_of_set[c];
            const VertexSet& outside = report.components_of_rest[r];
            if (inside.size() < outside.size() && has_edge_between(g, inside, outside))
                report.violations.emplace_back(static_cast<int>(c), static_cast<int>(r));
        }
    report.is_safe = report.violations.empty();
    report.is_connected_safe = report.is_safe && report.components_of_set.size() == 1;
    return report;
}

ComponentProjection component_projection(const ProductGraph& p, const VertexSet& s) {
    const Graph& g = p.graph();
    if (s.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match the graph order");
    if (s.size() == g.order())
        throw invalid_input_error("the removed set must leave at least one vertex");

    // components() orders by smallest flat index; distinct components of a
    // rook graph never share a row, so the component holding the smallest
    // flat index also holds the smallest (row, column) pair and the required
    // ordering is already in place.
    ComponentProjection proj;
    for (const VertexSet& comp : components(g, s.complement())) {
        std::vector<int> rows;
        std::vector<int> cols;
        for (int v : comp.members()) {
            ProductCoord c = p.coord_of(v);
            rows.push_back(c.row);
            cols.push_back(c.col);
        }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        proj.rows.push_back(std::move(rows));
        proj.cols.push_back(std::move(cols));
    }
    return proj;
}

bool cut_connectivity_criterion(const ProductGraph& p, const VertexSet& s) {
    ComponentProjection proj = component_projection(p, s);
    std::size_t row_total = 0;
    std::size_t col_total = 0;
    for (int t = 0; t < proj.count(); ++t) {
        row_total += proj.rows[static_cast<std::size_t>(t)].size();
        col_total += proj.cols[static_cast<std::size_t>(t)].size();
    }
    return row_total < static_cast<std::size_t>(p.rows()) ||
           col_total < static_cast<std::size_t>(p.cols()) || proj.count() >= 3;
}

} // namespace safenum
