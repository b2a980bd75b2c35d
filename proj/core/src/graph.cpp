#include "safenum/graph.hpp"

#include <algorithm>
#include <string>

#include "safenum/error.hpp"

namespace safenum {

Graph::Graph(int order) {
    if (order < 1) throw invalid_input_error("graph order must be at least 1");
    adj_.resize(static_cast<std::size_t>(order));
}

Graph Graph::complete(int order) {
    Graph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int order) {
    Graph g(order);
    for (int v = 1; v < order; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph Graph::cycle(int order) {
    if (order < 3) throw invalid_input_error("a cycle needs at least 3 vertices");
    Graph g = path(order);
    g.add_edge(0, order - 1);
    return g;
}

Graph Graph::star(int leaves) {
    if (leaves < 0) throw invalid_input_error("leaf count must be non-negative");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw invalid_input_error("edge endpoint out of range");
    if (u == v) throw invalid_input_error("self-loops are not allowed");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw invalid_input_error("edge endpoint out of range");
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= order()) throw invalid_input_error("vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    if (within.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match the graph order");
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : within.members()) in[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    std::vector<int> comp;
    for (int start : within.members()) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        comp.clear();
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!in[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
        out.emplace_back(g.order(), comp);
    }
    return out;
}

bool is_connected(const Graph& g, const VertexSet& within) {
    if (within.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match the graph order");
    if (within.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : within.members()) in[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> stack{within.members().front()};
    seen[static_cast<std::size_t>(stack.front())] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.neighbors(v)) {
            if (!in[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return reached == within.size();
}

bool is_connected(const Graph& g) { return is_connected(g, VertexSet::full(g.order())); }

bool has_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.universe() != g.order() || b.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match the graph order");
    if (a.intersects(b)) throw invalid_input_error("sets must be disjoint");
    std::vector<char> in_b(static_cast<std::size_t>(g.order()), 0);
    for (int v : b.members()) in_b[static_cast<std::size_t>(v)] = 1;
    for (int v : a.members())
        for (int w : g.neighbors(v))
            if (in_b[static_cast<std::size_t>(w)]) return true;
    return false;
}

} // namespace safenum
