#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rcpower/coloring.hpp"

namespace rcpower {

/// Line-oriented coloring file:
///
///     k=<int> edges=<int>
///     u v color              (one line per edge, in edge-index order)
///     pair u v : v0 v1 ... vl   (optional certificate lines)
///
/// Writing a parsed document reproduces the input byte for byte.
struct ColoredEdge {
  Vertex u;
  Vertex v;
  int color;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

struct ColoringDocument {
  int k = 1;
  std::vector<ColoredEdge> edges;
  std::vector<RainbowPath> pairs;
  friend bool operator==(const ColoringDocument&, const ColoringDocument&) = default;
};

ColoringDocument make_document(const Graph& graph, const EdgeColoring& coloring,
                               const RainbowCertificate* certificate = nullptr);

std::string write_document(const ColoringDocument& doc);

/// Throws FormatError on any deviation from the canonical layout.
ColoringDocument parse_document(std::string_view text);

/// Binds a document to a graph. Throws FormatError when the edge list does
/// not match the graph's edges in index order.
EdgeColoring coloring_from_document(const Graph& graph, const ColoringDocument& doc);
RainbowCertificate certificate_from_document(const ColoringDocument& doc);

}  // namespace rcpower
