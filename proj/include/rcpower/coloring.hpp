#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rcpower/power_graph.hpp"

namespace rcpower {

/// Total edge coloring with a declared palette {1..k}; unused colors allowed.
struct EdgeColoring {
  int k = 1;
  std::vector<int> colors;  // indexed by EdgeId

  int operator[](EdgeId e) const { return colors[e]; }
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Largest palette the checker supports (colors are tracked in a 64-bit mask).
inline constexpr int kMaxColors = 64;

/// Throws std::invalid_argument unless every edge has a color in 1..k.
void validate_coloring(const Graph& graph, const EdgeColoring& coloring);

struct RainbowPath {
  Vertex u;
  Vertex v;
  std::vector<Vertex> path;  // u ... v
  friend bool operator==(const RainbowPath&, const RainbowPath&) = default;
};

/// One witness per unordered pair u < v, in lexicographic pair order.
struct RainbowCertificate {
  std::vector<RainbowPath> paths;
  friend bool operator==(const RainbowCertificate&, const RainbowCertificate&) = default;
};

struct FailingPair {
  Vertex u;
  Vertex v;
  friend bool operator==(const FailingPair&, const FailingPair&) = default;
};

struct RainbowCheck {
  std::optional<FailingPair> failing;  // lexicographically first pair without a rainbow path
  RainbowCertificate certificate;      // complete only when failing is empty
  explicit operator bool() const { return !failing.has_value(); }
};

/// Searches every pair for a shortest rainbow path over (vertex, used-colors)
/// states. Sources are processed in parallel; the result does not depend on
/// the schedule.
RainbowCheck is_rainbow_connected(const Graph& graph, const EdgeColoring& coloring);

/// Single-threaded reference for is_rainbow_connected.
RainbowCheck is_rainbow_connected_serial(const Graph& graph, const EdgeColoring& coloring);

/// Shortest rainbow u-v path, or nullopt.
std::optional<std::vector<Vertex>> find_rainbow_path(const Graph& graph,
                                                     const EdgeColoring& coloring, Vertex u,
                                                     Vertex v);

/// Replays a certificate: every pair present once in order, every path a
/// simple graph path with pairwise distinct colors and at most k edges.
bool replay_certificate(const Graph& graph, const EdgeColoring& coloring,
                        const RainbowCertificate& certificate);

}  // namespace rcpower
