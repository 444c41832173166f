#include "rcpower/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rcpower {

void validate_coloring(const Graph& graph, const EdgeColoring& coloring) {
  if (coloring.k < 1) throw std::invalid_argument("color count must be >= 1");
  if (coloring.colors.size() != graph.edge_count()) {
    throw std::invalid_argument("coloring has " + std::to_string(coloring.colors.size()) +
                                " entries for " + std::to_string(graph.edge_count()) + " edges");
  }
  for (int c : coloring.colors) {
    if (c < 1 || c > coloring.k) throw std::invalid_argument("color out of range 1..k");
  }
}

namespace {

struct SearchNode {
  Vertex vertex;
  std::uint64_t used;
  std::int32_t parent;
};

struct StateHash {
  std::size_t operator()(const std::pair<Vertex, std::uint64_t>& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.second * 0x9E3779B97F4A7C15ULL ^ s.first);
  }
};

std::vector<Vertex> trace(const std::vector<SearchNode>& nodes, std::int32_t at) {
  std::vector<Vertex> path;
  for (; at >= 0; at = nodes[at].parent) path.push_back(nodes[at].vertex);
  std::reverse(path.begin(), path.end());
  return path;
}

// Breadth-first search over (vertex, used colors) from `source`, stopping once
// every wanted target has been reached. The first arrival at a target is a
// shortest rainbow walk, and a shortest rainbow walk never repeats a vertex.
// Entry t of the result is empty when target t is unreachable.
std::vector<std::vector<Vertex>> rainbow_search(const Graph& graph, const EdgeColoring& coloring,
                                                Vertex source, std::span<const Vertex> targets) {
  const auto n = graph.vertex_count();
  std::vector<std::int32_t> slot(n, -1);
  for (std::size_t t = 0; t < targets.size(); ++t) slot[targets[t]] = static_cast<std::int32_t>(t);
  std::vector<std::vector<Vertex>> found(targets.size());
  std::size_t remaining = targets.size();
  if (slot[source] >= 0) {
    found[slot[source]] = {source};
    --remaining;
  }

  std::vector<SearchNode> nodes{{source, 0, -1}};
  std::unordered_set<std::pair<Vertex, std::uint64_t>, StateHash> seen{{source, 0}};
  for (std::size_t head = 0; head < nodes.size() && remaining > 0; ++head) {
    const auto [v, used, parent] = nodes[head];
    for (auto w : graph.neighbors(v)) {
      const std::uint64_t bit = std::uint64_t{1} << (coloring[graph.edge_id(v, w)] - 1);
      if (used & bit) continue;
      const std::uint64_t next = used | bit;
      if (!seen.emplace(w, next).second) continue;
      nodes.push_back({w, next, static_cast<std::int32_t>(head)});
      if (slot[w] >= 0 && found[slot[w]].empty()) {
        found[slot[w]] = trace(nodes, static_cast<std::int32_t>(nodes.size() - 1));
        if (--remaining == 0) break;
      }
    }
  }
  return found;
}

struct SourceResult {
  std::vector<RainbowPath> paths;
  std::optional<Vertex> first_failure;
};

SourceResult check_source(const Graph& graph, const EdgeColoring& coloring, Vertex u) {
  const auto n = static_cast<Vertex>(graph.vertex_count());
  std::vector<Vertex> pending;
  for (Vertex v = u + 1; v < n; ++v) {
    if (!graph.adjacent(u, v)) pending.push_back(v);
  }
  const auto found = rainbow_search(graph, coloring, u, pending);
  SourceResult result;
  std::size_t next = 0;
  for (Vertex v = u + 1; v < n; ++v) {
    if (graph.adjacent(u, v)) {
      result.paths.push_back({u, v, {u, v}});
      continue;
    }
    const auto& path = found[next++];
    if (path.empty()) {
      if (!result.first_failure) result.first_failure = v;
      continue;
    }
    result.paths.push_back({u, v, path});
  }
  return result;
}

void check_palette(const Graph& graph, const EdgeColoring& coloring) {
  validate_coloring(graph, coloring);
  if (coloring.k > kMaxColors) {
    throw std::invalid_argument("rainbow check supports at most " + std::to_string(kMaxColors) +
                                " colors");
  }
}

RainbowCheck combine(std::vector<SourceResult>& per_source) {
  RainbowCheck out;
  for (Vertex u = 0; u < per_source.size(); ++u) {
    if (per_source[u].first_failure) {
      out.failing = FailingPair{u, *per_source[u].first_failure};
      out.certificate.paths.clear();
      return out;
    }
    auto& paths = per_source[u].paths;
    std::move(paths.begin(), paths.end(), std::back_inserter(out.certificate.paths));
  }
  return out;
}

}  // namespace

RainbowCheck is_rainbow_connected(const Graph& graph, const EdgeColoring& coloring) {
  check_palette(graph, coloring);
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  std::vector<SourceResult> per_source(graph.vertex_count());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t u = 0; u < n; ++u) {
    per_source[u] = check_source(graph, coloring, static_cast<Vertex>(u));
  }
  return combine(per_source);
}

RainbowCheck is_rainbow_connected_serial(const Graph& graph, const EdgeColoring& coloring) {
  check_palette(graph, coloring);
  std::vector<SourceResult> per_source(graph.vertex_count());
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    per_source[u] = check_source(graph, coloring, u);
  }
  return combine(per_source);
}

std::optional<std::vector<Vertex>> find_rainbow_path(const Graph& graph,
                                                     const EdgeColoring& coloring, Vertex u,
                                                     Vertex v) {
  check_palette(graph, coloring);
  const Vertex target[] = {v};
  auto found = rainbow_search(graph, coloring, u, target);
  if (found[0].empty()) return std::nullopt;
  return std::move(found[0]);
}

bool replay_certificate(const Graph& graph, const EdgeColoring& coloring,
                        const RainbowCertificate& certificate) {
  try {
    validate_coloring(graph, coloring);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const auto n = static_cast<Vertex>(graph.vertex_count());
  std::size_t index = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++index) {
      if (index >= certificate.paths.size()) return false;
      const auto& entry = certificate.paths[index];
      const auto& p = entry.path;
      if (entry.u != u || entry.v != v || p.size() < 2 || p.front() != u || p.back() != v) {
        return false;
      }
      if (static_cast<int>(p.size()) - 1 > coloring.k) return false;
      std::vector<Vertex> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      std::vector<int> used;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] >= n || p[i + 1] >= n) return false;
        const auto e = graph.find_edge(p[i], p[i + 1]);
        if (!e) return false;
        used.push_back(coloring[*e]);
      }
      std::sort(used.begin(), used.end());
      if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;
    }
  }
  return index == certificate.paths.size();
}

}  // namespace rcpower
