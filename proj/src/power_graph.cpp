#include "rcpower/power_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rcpower {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), edge_ids_(vertex_count * vertex_count, -1), neighbors_(vertex_count) {
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    edge_ids_[u * n_ + v] = edge_ids_[v * n_ + u] = static_cast<std::int32_t>(i);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
  if (labels.size() == n_) {
    labels_ = std::move(labels);
  } else {
    labels_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_[v] = std::to_string(v);
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  const auto id = edge_ids_[a * n_ + b];
  if (id < 0) return std::nullopt;
  return static_cast<EdgeId>(id);
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
  const auto id = find_edge(a, b);
  if (!id) {
    throw std::out_of_range("no edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
  }
  return *id;
}

namespace {

// Row x of the "y is a power of x" relation.
void mark_powers(const Group& g, Element x, std::vector<char>& row) {
  for (Element y = x; y != 0; y = g.multiply(y, x)) row[y] = 1;
  row[0] = 1;
}

Graph assemble(const Group& g, const std::vector<std::vector<char>>& powers) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (powers[u][v] || powers[v][u]) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges), g.labels());
}

}  // namespace

Graph build_power_graph(const Group& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<char>> powers(g.order(), std::vector<char>(g.order(), 0));
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) mark_powers(g, static_cast<Element>(x), powers[x]);
  return assemble(g, powers);
}

Graph build_power_graph_serial(const Group& g) {
  std::vector<std::vector<char>> powers(g.order(), std::vector<char>(g.order(), 0));
  for (Element x = 0; x < g.order(); ++x) mark_powers(g, x, powers[x]);
  return assemble(g, powers);
}

namespace {

std::vector<int> bfs_distances(const Graph& graph, Vertex source) {
  std::vector<int> dist(graph.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop();
    for (auto w : graph.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& graph) {
  if (graph.vertex_count() == 0) return true;
  const auto dist = bfs_distances(graph, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_complete(const Graph& graph) {
  const auto n = graph.vertex_count();
  return graph.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

int diameter(const Graph& graph) {
  int best = 0;
  for (Vertex s = 0; s < graph.vertex_count(); ++s) {
    for (int d : bfs_distances(graph, s)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<Vertex> pendant_vertices(const Graph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> common_neighbors(const Graph& graph, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  const auto a = graph.neighbors(u);
  const auto b = graph.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace rcpower
