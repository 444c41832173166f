#pragma once

#include <string>

#include "rcpower/coloring.hpp"

namespace rcpower {

/// Undirected DOT graph; vertices carry their labels, edges are listed in
/// edge-index order and get `color=<int>` when a coloring is supplied.
std::string to_dot(const Graph& graph, const EdgeColoring* coloring = nullptr);

}  // namespace rcpower
