#pragma once

#include <string>

#include "safenum/graph.hpp"
#include "safenum/product.hpp"
#include "safenum/safety.hpp"

namespace safenum {

/// Parses {"order": N, "edges": [[u, v], ...]} with 0-based endpoints.
/// Self-loops, out-of-range endpoints and duplicate edges are rejected.
Graph graph_from_json(const std::string& text);

/// Serialises a graph in the same format: edges each as [u, v] with u < v,
/// sorted ascending.
std::string graph_to_json(const Graph& g);

/// Parses a vertex set for a plain graph: a JSON array of 0-based indices.
VertexSet vertex_set_from_json(const std::string& text, const Graph& g);

/// Parses a vertex set for a rook graph. Accepts an array of 0-based flat
/// indices, an array of 1-based [row, column] pairs, or an object carrying
/// the pairs under a "vertices" key (the shape `construct` emits).
VertexSet vertex_set_from_json(const std::string& text, const ProductGraph& p);

/// Serialises a vertex set over a rook graph as [[row, column], ...] pairs,
/// 1-based, ascending.
std::string vertex_set_to_json(const ProductGraph& p, const VertexSet& s);

/// Serialises a safety report. With a product given, vertices are written as
/// 1-based [row, column] pairs; otherwise as flat 0-based indices.
std::string safety_report_to_json(const SafetyReport& report,
                                  const ProductGraph* coords = nullptr);

} // namespace safenum
