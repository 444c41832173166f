#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcpower/coloring.hpp"
#include "rcpower/group.hpp"

namespace rcpower {

/// Edges pairing the i-th generator of <x> (ascending index) with every
/// element of <x> whose order is the i-th proper nontrivial divisor of |x|
/// (ascending). Throws NotApplicable when |x| is 1 or prime.
std::vector<Edge> e1_edge_set(const Group& g, Element x);

// Constructive rainbow colorings of the power graph `graph` of `g`. Each
// throws NotApplicable (or GroupTooSmall) when its hypotheses fail; none of
// them certifies its own output.

/// max(|M_G|, 3) colors; needs |G| >= 3.
EdgeColoring coloring_max_m3(const Group& g, const Graph& graph);
/// Two colors for a cyclic group whose order is not a prime power.
EdgeColoring coloring_cyclic_2(const Group& g, const Graph& graph);
/// Two colors for Q_8 x Z_n, n odd.
EdgeColoring coloring_q8zn(const Group& g, const Graph& graph);
/// Two colors for the p^n q groups described by analyze_pnq.
EdgeColoring coloring_pnq(const Group& g, const Graph& graph);

enum class Construction { MaxM3, Cyclic2, Q8Zn, Pnq };

inline constexpr Construction kAllConstructions[] = {Construction::Cyclic2, Construction::Q8Zn,
                                                     Construction::Pnq, Construction::MaxM3};

/// "max-m3", "cyclic2", "q8zn", "pnq".
std::string_view construction_name(Construction c);
std::optional<Construction> parse_construction(std::string_view name);

EdgeColoring construct_coloring(Construction c, const Group& g, const Graph& graph);

}  // namespace rcpower
