#include "rcpower/dot_export.hpp"

namespace rcpower {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& graph, const EdgeColoring* coloring) {
  if (coloring) validate_coloring(graph, *coloring);
  std::string out = "graph power_graph {\n";
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=" + quoted(graph.label(v)) + "];\n";
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    out += "  " + std::to_string(graph.edge(e).u) + " -- " + std::to_string(graph.edge(e).v);
    if (coloring) out += " [color=" + std::to_string((*coloring)[e]) + "]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace rcpower
