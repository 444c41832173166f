#include "rcpower/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "rcpower/constructions.hpp"
#include "rcpower/errors.hpp"
#include "rcpower/number_theory.hpp"

namespace rcpower {

std::string_view reason_name(LowerReason r) {
  switch (r) {
    case LowerReason::Diameter:
      return "Diameter";
    case LowerReason::NotComplete:
      return "NotComplete";
    case LowerReason::PendantCount:
      return "PendantCount";
    case LowerReason::SylowTriple:
      return "SylowTriple";
    case LowerReason::Exhaustion:
      return "Exhaustion";
  }
  return "?";
}

std::string_view status_name(DecideStatus s) {
  switch (s) {
    case DecideStatus::Found:
      return "Found";
    case DecideStatus::NoColoring:
      return "NoColoring";
    case DecideStatus::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "?";
}

LowerBound rc_lower_bound(const Graph& graph, const Group& g) {
  LowerBound lb;
  const bool complete = is_complete(graph);
  if (!complete) lb = {2, LowerReason::NotComplete};
  // With at least three vertices in a connected graph, the path between two
  // pendant vertices uses both pendant edges.
  if (graph.vertex_count() >= 3) {
    const auto pendants = static_cast<int>(pendant_vertices(graph).size());
    if (pendants > lb.value) lb = {pendants, LowerReason::PendantCount};
  }
  if (!complete && lb.value < 3) {
    for (auto p : prime_divisors(g.order())) {
      if (count_order_p_subgroups(g, p) >= 3) {
        lb = {3, LowerReason::SylowTriple};
        break;
      }
    }
  }
  return lb;
}

namespace {

class Deadline {
 public:
  explicit Deadline(const Budget& budget) : budget_(budget), start_(Clock::now()) {}

  // Counts one search node; false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) return false;
    if (budget_.max_seconds && (nodes_ & 0xFFF) == 0) {
      const auto spent = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start_);
      if (static_cast<std::uint64_t>(spent.count()) >= *budget_.max_seconds) return false;
    }
    return true;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  using Clock = std::chrono::steady_clock;
  Budget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

// Edges that serve no nonadjacent pair (weight 0) are left out: any color
// works for them. The rest are ordered by smaller endpoint degree, larger
// endpoint degree, then by how many witnesses they belong to (most first).
std::vector<EdgeId> branch_order(const Graph& graph, const std::vector<std::size_t>& weight) {
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (weight[e] > 0) order.push_back(e);
  }
  const auto key = [&](EdgeId e) {
    const auto a = graph.degree(graph.edge(e).u);
    const auto b = graph.degree(graph.edge(e).v);
    return std::tuple{std::min(a, b), std::max(a, b), -static_cast<std::int64_t>(weight[e]), e};
  };
  std::sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return key(x) < key(y); });
  return order;
}

std::vector<std::pair<Vertex, Vertex>> nonadjacent_pairs(const Graph& graph) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto n = static_cast<Vertex>(graph.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!graph.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

enum class Outcome { Found, Exhausted, Aborted };

// k = 2: a nonadjacent pair {u, v} is served exactly by a common neighbour w
// whose edges uw and wv get different colors.
class TwoColorSearch {
 public:
  TwoColorSearch(const Graph& graph, Deadline& deadline)
      : graph_(graph), deadline_(deadline), color_(graph.edge_count(), 0),
        occurrences_(graph.edge_count()) {
    for (const auto& [u, v] : nonadjacent_pairs(graph)) {
      const auto pair = static_cast<std::uint32_t>(witnesses_.size());
      auto& list = witnesses_.emplace_back();
      for (auto w : common_neighbors(graph, u, v)) {
        const EdgeId a = graph.edge_id(u, w), b = graph.edge_id(w, v);
        list.emplace_back(a, b);
        occurrences_[a].push_back({pair, b});
        occurrences_[b].push_back({pair, a});
      }
      alive_.push_back(static_cast<std::uint32_t>(list.size()));
    }
    std::vector<std::size_t> weight(graph.edge_count());
    for (EdgeId e = 0; e < weight.size(); ++e) weight[e] = occurrences_[e].size();
    rank_.assign(graph.edge_count(), 0);
    const auto order = branch_order(graph, weight);
    for (std::size_t i = 0; i < order.size(); ++i) rank_[order[i]] = static_cast<std::uint32_t>(i);
    satisfied_.assign(alive_.size(), 0);
  }

  Outcome run() {
    for (auto count : alive_) {
      if (count == 0) return Outcome::Exhausted;
    }
    switch (search()) {
      case Step::Found:
        return Outcome::Found;
      case Step::Fail:
        return Outcome::Exhausted;
      case Step::Abort:
        break;
    }
    return Outcome::Aborted;
  }

  EdgeColoring coloring() const {
    EdgeColoring c{2, {}};
    for (auto col : color_) c.colors.push_back(col == 0 ? 1 : col);
    return c;
  }

 private:
  enum class Step { Found, Fail, Abort };

  struct Occurrence {
    std::uint32_t pair;
    EdgeId other;
  };

  // Records the assignment even on conflict so undo() stays symmetric.
  bool assign(EdgeId e, std::uint8_t c) {
    color_[e] = c;
    trail_.push_back(e);
    bool ok = true;
    for (const auto& [pair, other] : occurrences_[e]) {
      if (color_[other] == 0) {
        if (alive_[pair] == 1) queue_.push_back(pair);
      } else if (color_[other] == c) {
        if (--alive_[pair] == 0) ok = false;
        if (alive_[pair] == 1) queue_.push_back(pair);
      } else {
        ++satisfied_[pair];
      }
    }
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId e = trail_.back();
      trail_.pop_back();
      for (const auto& [pair, other] : occurrences_[e]) {
        if (color_[other] == 0) continue;
        if (color_[other] == color_[e]) {
          ++alive_[pair];
        } else {
          --satisfied_[pair];
        }
      }
      color_[e] = 0;
    }
    queue_.clear();
  }

  // A pair with one live witness whose edges are half-colored forces the
  // other edge to the opposite color.
  bool propagate() {
    while (!queue_.empty()) {
      const auto pair = queue_.back();
      queue_.pop_back();
      if (alive_[pair] != 1) continue;
      for (const auto& [a, b] : witnesses_[pair]) {
        const auto ca = color_[a], cb = color_[b];
        if (ca != 0 && ca == cb) continue;
        if (ca != 0 && cb == 0 && !assign(b, static_cast<std::uint8_t>(3 - ca))) return false;
        if (cb != 0 && ca == 0 && !assign(a, static_cast<std::uint8_t>(3 - cb))) return false;
        break;
      }
    }
    return true;
  }

  // Fail-first: branch inside the unsatisfied pair with the fewest live
  // witnesses, on its best-ranked uncolored edge. Nullopt once every pair
  // is served by a witness with two differently colored edges.
  std::optional<EdgeId> pick() const {
    std::optional<std::uint32_t> best;
    for (std::uint32_t pair = 0; pair < alive_.size(); ++pair) {
      if (satisfied_[pair] > 0) continue;
      if (!best || alive_[pair] < alive_[*best]) best = pair;
      if (alive_[*best] == 1) break;
    }
    if (!best) return std::nullopt;
    std::optional<EdgeId> edge;
    const auto consider = [&](EdgeId e) {
      if (color_[e] == 0 && (!edge || rank_[e] < rank_[*edge])) edge = e;
    };
    for (const auto& [a, b] : witnesses_[*best]) {
      if (color_[a] != 0 && color_[a] == color_[b]) continue;
      consider(a);
      consider(b);
    }
    return edge;
  }

  Step search() {
    const auto next = pick();
    if (!next) return Step::Found;
    if (!deadline_.tick()) return Step::Abort;
    const EdgeId e = *next;
    // Value precedence: the first branching edge only tries color 1.
    const std::uint8_t last = trail_.empty() ? 1 : 2;
    for (std::uint8_t c = 1; c <= last; ++c) {
      const auto mark = trail_.size();
      if (assign(e, c) && propagate()) {
        const auto step = search();
        if (step != Step::Fail) return step;
      }
      undo(mark);
    }
    return Step::Fail;
  }

  const Graph& graph_;
  Deadline& deadline_;
  std::vector<std::uint8_t> color_;
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> witnesses_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::uint32_t> alive_;
  std::vector<std::uint32_t> satisfied_;
  std::vector<std::uint32_t> rank_;
  std::vector<EdgeId> trail_;
  std::vector<std::uint32_t> queue_;
};

// General k: every nonadjacent pair keeps its simple paths of length <= k.
// A path stays usable while its assigned colors are pairwise distinct; the
// unassigned edges can always take fresh colors because length <= k.
class PathSearch {
 public:
  PathSearch(const Graph& graph, int k, Deadline& deadline)
      : graph_(graph), k_(k), deadline_(deadline), color_(graph.edge_count(), 0),
        containing_(graph.edge_count()) {}

  Outcome run() {
    for (const auto& [u, v] : nonadjacent_pairs(graph_)) {
      const auto pair = static_cast<std::uint32_t>(alive_.size());
      alive_.push_back(0);
      std::vector<EdgeId> edges;
      std::vector<char> on_path(graph_.vertex_count(), 0);
      on_path[u] = 1;
      if (!enumerate(u, v, pair, edges, on_path)) return Outcome::Aborted;
      if (alive_[pair] == 0) return Outcome::Exhausted;
    }
    std::vector<std::size_t> weight(graph_.edge_count());
    for (EdgeId e = 0; e < weight.size(); ++e) weight[e] = containing_[e].size();
    order_ = branch_order(graph_, weight);
    switch (search(0, 0)) {
      case Step::Found:
        return Outcome::Found;
      case Step::Fail:
        return Outcome::Exhausted;
      case Step::Abort:
        break;
    }
    return Outcome::Aborted;
  }

  EdgeColoring coloring() const {
    EdgeColoring c{k_, color_};
    for (auto& col : c.colors) col = col == 0 ? 1 : col;
    return c;
  }

 private:
  enum class Step { Found, Fail, Abort };

  // Depth-first enumeration of simple u-v paths with at most k edges; each
  // path found costs one node of budget.
  bool enumerate(Vertex at, Vertex target, std::uint32_t pair, std::vector<EdgeId>& edges,
                 std::vector<char>& on_path) {
    if (static_cast<int>(edges.size()) == k_) return true;
    for (auto w : graph_.neighbors(at)) {
      if (on_path[w]) continue;
      edges.push_back(graph_.edge_id(at, w));
      if (w == target) {
        if (!deadline_.tick()) return false;
        const auto id = static_cast<std::uint32_t>(path_pair_.size());
        path_pair_.push_back(pair);
        path_edges_.push_back(edges);
        killer_.push_back(kNone);
        for (auto e : edges) containing_[e].push_back(id);
        ++alive_[pair];
      } else {
        on_path[w] = 1;
        const bool ok = enumerate(w, target, pair, edges, on_path);
        on_path[w] = 0;
        if (!ok) return false;
      }
      edges.pop_back();
    }
    return true;
  }

  bool assign(EdgeId e, int c) {
    color_[e] = c;
    bool ok = true;
    for (auto p : containing_[e]) {
      if (killer_[p] != kNone) continue;
      for (auto f : path_edges_[p]) {
        if (f != e && color_[f] == c) {
          killer_[p] = e;
          if (--alive_[path_pair_[p]] == 0) ok = false;
          break;
        }
      }
    }
    return ok;
  }

  void unassign(EdgeId e) {
    for (auto p : containing_[e]) {
      if (killer_[p] == e) {
        killer_[p] = kNone;
        ++alive_[path_pair_[p]];
      }
    }
    color_[e] = 0;
  }

  Step search(std::size_t pos, int used) {
    if (pos == order_.size()) return Step::Found;
    if (!deadline_.tick()) return Step::Abort;
    const EdgeId e = order_[pos];
    const int last = std::min(k_, used + 1);
    for (int c = 1; c <= last; ++c) {
      if (assign(e, c)) {
        const auto step = search(pos + 1, std::max(used, c));
        if (step != Step::Fail) return step;
      }
      unassign(e);
    }
    return Step::Fail;
  }

  static constexpr EdgeId kNone = ~EdgeId{0};

  const Graph& graph_;
  int k_;
  Deadline& deadline_;
  std::vector<int> color_;
  std::vector<std::vector<std::uint32_t>> containing_;
  std::vector<std::uint32_t> path_pair_;
  std::vector<std::vector<EdgeId>> path_edges_;
  std::vector<EdgeId> killer_;
  std::vector<std::uint32_t> alive_;
  std::vector<EdgeId> order_;
};

template <class Search>
DecideResult finish(Search& search, Deadline& deadline) {
  DecideResult r;
  switch (search.run()) {
    case Outcome::Found:
      r.status = DecideStatus::Found;
      r.coloring = search.coloring();
      break;
    case Outcome::Exhausted:
      r.status = DecideStatus::NoColoring;
      break;
    case Outcome::Aborted:
      r.status = DecideStatus::BudgetExceeded;
      break;
  }
  r.nodes = deadline.nodes();
  return r;
}

}  // namespace

DecideResult rc_decide(const Graph& graph, int k, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Deadline deadline(budget);
  if (k == 2) {
    TwoColorSearch search(graph, deadline);
    return finish(search, deadline);
  }
  PathSearch search(graph, k, deadline);
  return finish(search, deadline);
}

RcReport rc_exact(const Graph& graph, const Group& g, const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  RcReport r;
  r.group = g.name();
  r.order = g.order();
  r.edges = graph.edge_count();
  r.m_g = maximal_involutions(g).size();
  r.lower = rc_lower_bound(graph, g);

  const auto certify = [&](const EdgeColoring& c, std::string_view method) {
    if (!is_rainbow_connected(graph, c)) {
      throw Error(std::string(method) + " coloring of " + g.name() + " failed certification");
    }
  };
  const auto offer = [&](EdgeColoring c, std::string_view method) {
    if (!r.upper_method.empty() && c.k >= r.upper) return;
    certify(c, method);
    r.upper = c.k;
    r.upper_method = method;
    r.coloring = std::move(c);
  };

  if (is_complete(graph)) {
    offer(EdgeColoring{1, std::vector<int>(graph.edge_count(), 1)}, "complete");
  }
  for (auto method : kAllConstructions) {
    if (!r.upper_method.empty() && r.upper <= r.lower.value) break;
    try {
      offer(construct_coloring(method, g, graph), construction_name(method));
    } catch (const NotApplicable&) {
    } catch (const GroupTooSmall&) {
    }
  }
  if (r.upper_method.empty()) throw Error("no upper bound available for " + g.name());

  bool aborted = false;
  while (r.lower.value < r.upper && !aborted) {
    const int k = r.lower.value;
    auto d = rc_decide(graph, k, budget);
    r.nodes += d.nodes;
    switch (d.status) {
      case DecideStatus::Found:
        certify(*d.coloring, "search");
        r.upper = k;
        r.upper_method = "search";
        r.coloring = std::move(*d.coloring);
        break;
      case DecideStatus::NoColoring:
        r.lower = {k + 1, LowerReason::Exhaustion};
        break;
      case DecideStatus::BudgetExceeded:
        aborted = true;
        break;
    }
  }
  if (r.lower.value > r.upper) {
    throw Error(g.name() + ": lower bound " + std::to_string(r.lower.value) +
                " exceeds certified upper bound " + std::to_string(r.upper));
  }
  if (r.lower.value == r.upper) {
    r.exact = r.upper;
    r.status = RcStatus::Exact;
  }
  r.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());
  return r;
}

nlohmann::ordered_json to_json(const RcReport& report) {
  nlohmann::ordered_json j;
  j["group"] = report.group;
  j["order"] = report.order;
  j["edges"] = report.edges;
  j["m_g"] = report.m_g;
  j["lower"] = report.lower.value;
  j["lower_reason"] = reason_name(report.lower.reason);
  j["upper"] = report.upper;
  j["exact"] = report.exact ? nlohmann::ordered_json(*report.exact) : nlohmann::ordered_json(nullptr);
  j["status"] = report.status == RcStatus::Exact ? "exact" : "interval";
  j["nodes"] = report.nodes;
  return j;
}

}  // namespace rcpower
