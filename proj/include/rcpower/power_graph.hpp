#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcpower/group.hpp"

namespace rcpower {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes an unordered vertex pair so that u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph with stable edge indices.
///
/// Edges are stored in lexicographic (min, max) order and indexed 0..m-1 in
/// that order. For power graphs vertex i is group element i, so vertex 0 is
/// the identity.
class Graph {
 public:
  /// Duplicate edges are merged; self-loops and out-of-range endpoints throw
  /// std::invalid_argument. Missing labels default to the vertex number.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const { return edge_ids_[a * n_ + b] >= 0; }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  /// Throws std::out_of_range when {a, b} is not an edge.
  EdgeId edge_id(Vertex a, Vertex b) const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
  const std::string& label(Vertex v) const { return labels_[v]; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> edge_ids_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::string> labels_;
};

/// Power graph: distinct u, v adjacent iff one is a power of the other.
/// Rows of the adjacency relation are computed in parallel.
Graph build_power_graph(const Group& g);

/// Single-threaded reference for build_power_graph.
Graph build_power_graph_serial(const Group& g);

bool is_connected(const Graph& graph);
bool is_complete(const Graph& graph);
/// Largest eccentricity; -1 for a disconnected graph.
int diameter(const Graph& graph);
/// Vertices of degree exactly 1, ascending.
std::vector<Vertex> pendant_vertices(const Graph& graph);
std::vector<Vertex> common_neighbors(const Graph& graph, Vertex u, Vertex v);

}  // namespace rcpower
