#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rcpower/coloring.hpp"
#include "rcpower/group.hpp"

namespace rcpower {

/// Search limits for one (graph, k) decision.
struct Budget {
  std::uint64_t max_nodes = 10'000'000;
  std::optional<std::uint64_t> max_seconds;
};

enum class LowerReason {
  Diameter,      // trivial bound 1
  NotComplete,   // some pair is nonadjacent
  PendantCount,  // pendant edges need pairwise distinct colors
  SylowTriple,   // three subgroups of order p force three colors at e
  Exhaustion,    // search refuted every smaller k
};

std::string_view reason_name(LowerReason r);

struct LowerBound {
  int value = 1;
  LowerReason reason = LowerReason::Diameter;
};

/// Best of the structural bound rules for the power graph `graph` of `g`.
LowerBound rc_lower_bound(const Graph& graph, const Group& g);

enum class DecideStatus { Found, NoColoring, BudgetExceeded };

std::string_view status_name(DecideStatus s);

struct DecideResult {
  DecideStatus status = DecideStatus::NoColoring;
  std::optional<EdgeColoring> coloring;  // set iff Found
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking for a rainbow k-coloring of any graph.
///
/// Edges are branched in order of (smaller endpoint degree, larger endpoint
/// degree, index) and colors obey value precedence along that order. For
/// k = 2 every nonadjacent pair keeps its set of common neighbours whose two
/// edges may still differ, with unit propagation when one witness is left.
/// For other k each nonadjacent pair keeps its simple paths of length <= k
/// whose assigned colors are still pairwise distinct. A branch dies when a
/// pair runs out of witnesses. NoColoring is only returned after full
/// exhaustion.
DecideResult rc_decide(const Graph& graph, int k, const Budget& budget = {});

enum class RcStatus { Exact, Interval };

struct RcReport {
  std::string group;
  std::size_t order = 0;
  std::size_t edges = 0;
  std::size_t m_g = 0;
  LowerBound lower;
  int upper = 0;
  std::string upper_method;  // "complete", a construction name, or "search"
  EdgeColoring coloring;     // certified coloring with `upper` colors
  std::optional<int> exact;
  RcStatus status = RcStatus::Interval;
  std::uint64_t nodes = 0;
  std::uint64_t elapsed_ms = 0;
};

/// Lower bound rules, the applicable constructions (each certified), then
/// rc_decide for k = lower, lower + 1, ... until the gap closes or the budget
/// runs out. Throws Error if a construction fails certification.
RcReport rc_exact(const Graph& graph, const Group& g, const Budget& budget = {});

nlohmann::ordered_json to_json(const RcReport& report);

}  // namespace rcpower
