#include "safenum/json_io.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

#include "safenum/error.hpp"

namespace safenum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_checked(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw invalid_input_error("malformed JSON");
    return j;
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw invalid_input_error(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw invalid_input_error(std::string(what) + " out of range");
    return static_cast<int>(v);
}

VertexSet product_set_from_array(const json& arr, const ProductGraph& p) {
    const int universe = p.rows() * p.cols();
    std::vector<int> members;
    members.reserve(arr.size());
    bool pairs = !arr.empty() && arr.front().is_array();
    for (const json& e : arr) {
        if (pairs) {
            if (!e.is_array() || e.size() != 2)
                throw invalid_input_error("each cell must be a [row, column] pair");
            members.push_back(p.index_of({as_int(e[0], "row"), as_int(e[1], "column")}));
        } else {
            members.push_back(as_int(e, "vertex"));
        }
    }
    return VertexSet(universe, std::move(members));
}

ordered_json cell_value(const ProductGraph& p, int v) {
    const ProductCoord c = p.coord_of(v);
    return ordered_json{c.row, c.col};
}

}  // namespace

Graph graph_from_json(const std::string& text) {
    const json j = parse_checked(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
        throw invalid_input_error(R"(expected an object with "order" and "edges")");
    const int order = as_int(j["order"], "order");
    if (order < 1) throw invalid_input_error("order must be at least 1");
    const json& edges = j["edges"];
    if (!edges.is_array()) throw invalid_input_error("edges must be an array");
    Graph g(order);
    for (const json& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw invalid_input_error("each edge must be a [u, v] pair");
        const int u = as_int(e[0], "edge endpoint");
        const int v = as_int(e[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw invalid_input_error("edge endpoint out of range");
        if (u == v) throw invalid_input_error("self-loops are not allowed");
        if (g.has_edge(u, v)) throw invalid_input_error("duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

std::string graph_to_json(const Graph& g) {
    ordered_json out;
    out["order"] = g.order();
    ordered_json edges = ordered_json::array();
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) edges.push_back(ordered_json{u, v});
    out["edges"] = std::move(edges);
    return out.dump();
}

VertexSet vertex_set_from_json(const std::string& text, const Graph& g) {
    const json j = parse_checked(text);
    if (!j.is_array()) throw invalid_input_error("expected a JSON array of vertex indices");
    std::vector<int> members;
    members.reserve(j.size());
    for (const json& e : j) members.push_back(as_int(e, "vertex"));
    return VertexSet(g.order(), std::move(members));
}

VertexSet vertex_set_from_json(const std::string& text, const ProductGraph& p) {
    const json j = parse_checked(text);
    if (j.is_object()) {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw invalid_input_error(R"(expected a "vertices" array)");
        return product_set_from_array(j["vertices"], p);
    }
    if (!j.is_array())
        throw invalid_input_error("expected a JSON array of cells or flat indices");
    return product_set_from_array(j, p);
}

std::string vertex_set_to_json(const ProductGraph& p, const VertexSet& s) {
    ordered_json out = ordered_json::array();
    for (int v : s.members()) out.push_back(cell_value(p, v));
    return out.dump();
}

std::string safety_report_to_json(const SafetyReport& report, const ProductGraph* coords) {
    auto set_value = [&](const VertexSet& s) {
        ordered_json arr = ordered_json::array();
        for (int v : s.members()) {
            if (coords != nullptr)
                arr.push_back(cell_value(*coords, v));
            else
                arr.push_back(v);
        }
        return arr;
    };
    auto component_values = [&](const std::vector<VertexSet>& comps) {
        ordered_json arr = ordered_json::array();
        for (const VertexSet& c : comps) arr.push_back(set_value(c));
        return arr;
    };
    ordered_json out;
    out["is_safe"] = report.is_safe;
    out["is_connected_safe"] = report.is_connected_safe;
    out["components_of_S"] = component_values(report.components_of_set);
    out["components_of_rest"] = component_values(report.components_of_rest);
    ordered_json violations = ordered_json::array();
    for (auto [c, r] : report.violations) violations.push_back(ordered_json{c, r});
    out["violations"] = std::move(violations);
    return out.dump();
}

} // namespace safenum
