#include "rcpower/constructions.hpp"

#include <algorithm>
#include <set>

#include "rcpower/errors.hpp"
#include "rcpower/number_theory.hpp"
#include "rcpower/recognizers.hpp"

namespace rcpower {

namespace {

// Colors the listed edges 1 and every other edge 2.
EdgeColoring two_coloring(const Graph& graph, const std::set<Edge>& first) {
  EdgeColoring c{2, std::vector<int>(graph.edge_count(), 2)};
  for (const auto& e : first) c.colors[graph.edge_id(e.u, e.v)] = 1;
  return c;
}

Element smallest_generator(const Group& g, const std::vector<Element>& subgroup) {
  for (auto y : subgroup) {
    if (g.element_order(y) == subgroup.size()) return y;
  }
  throw Error("subgroup is not cyclic");
}

}  // namespace

std::vector<Edge> e1_edge_set(const Group& g, Element x) {
  const std::uint32_t m = g.element_order(x);
  if (m == 1 || is_prime(m)) {
    throw NotApplicable("E1(<x>) needs |x| composite, got |x| = " + std::to_string(m));
  }
  const auto gens = generator_class(g, x);
  auto ds = divisors(m);
  ds.erase(ds.begin());
  ds.pop_back();
  const auto span = cyclic_subgroup(g, x);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (auto y : span) {
      if (g.element_order(y) == ds[i]) out.push_back(make_edge(gens.at(i), y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeColoring coloring_max_m3(const Group& g, const Graph& graph) {
  if (g.order() < 3) throw GroupTooSmall("max(|M_G|,3) coloring needs |G| >= 3");
  const auto maximal = maximal_involutions(g);
  EdgeColoring c{std::max<int>(static_cast<int>(maximal.size()), 3),
                 std::vector<int>(graph.edge_count(), 3)};
  const auto paint = [&](Element a, Element b, int color) { c.colors[graph.edge_id(a, b)] = color; };

  std::vector<char> done(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x] || g.element_order(x) < 3) continue;
    const auto cls = generator_class(g, x);  // x is its smallest member
    for (auto y : cls) done[y] = 1;
    const auto k = g.element_order(x);
    const bool even = k % 2 == 0;
    const Element u = even ? g.power(x, k / 2) : 0;
    paint(0, x, 2);
    if (even) paint(u, x, 1);
    for (auto y : cls) {
      if (y == x) continue;
      paint(0, y, 1);
      if (even) paint(u, y, 2);
    }
  }
  for (std::size_t j = 0; j < maximal.size(); ++j) paint(0, maximal[j], static_cast<int>(j + 1));
  return c;
}

EdgeColoring coloring_cyclic_2(const Group& g, const Graph& graph) {
  if (!is_cyclic(g)) throw NotApplicable("group is not cyclic");
  if (is_prime_power(g.order())) throw NotApplicable("order is a prime power");
  Element generator = 0;
  while (g.element_order(generator) != g.order()) ++generator;
  const auto e1 = e1_edge_set(g, generator);
  return two_coloring(graph, {e1.begin(), e1.end()});
}

EdgeColoring coloring_q8zn(const Group& g, const Graph& graph) {
  const auto match = is_q8_times_zn(g);
  if (!match) throw NotApplicable("group is not Q_8 x Z_n with n odd");
  const std::uint64_t n = *match;
  const auto maximal = maximal_cyclic_subgroups(g);
  const Element x1 = smallest_generator(g, maximal[0]);
  const Element x2 = smallest_generator(g, maximal[1]);
  const Element x3 = smallest_generator(g, maximal[2]);
  const auto orders = g.element_orders();
  const auto u = static_cast<Element>(std::find(orders.begin(), orders.end(), 2U) - orders.begin());

  std::set<Edge> first;
  for (auto d : divisors(n)) {
    // Generators of the order-4d subgroups of <x1> and <x2>.
    for (auto b : generator_class(g, g.power(x1, n / d))) first.insert(make_edge(0, b));
    for (auto c : generator_class(g, g.power(x2, n / d))) first.insert(make_edge(u, c));
  }
  for (const auto& e : e1_edge_set(g, x1)) first.insert(e);
  for (const auto& e : e1_edge_set(g, x2)) first.insert(e);

  const auto cls3 = generator_class(g, x3);
  std::vector<Edge> through_u;
  auto e3 = e1_edge_set(g, x3);
  for (const auto& e : e3) {
    const Element other = e.u == u ? e.v : (e.v == u ? e.u : u);
    if (other != u && std::binary_search(cls3.begin(), cls3.end(), other)) through_u.push_back(e);
  }
  if (through_u.size() != 1) {
    throw Error("Q_8 x Z_n coloring: expected a unique generator of <x3> joined to the involution "
                "in E1(<x3>), found " + std::to_string(through_u.size()));
  }
  for (const auto& e : e3) {
    if (e != through_u.front()) first.insert(e);
  }
  return two_coloring(graph, first);
}

EdgeColoring coloring_pnq(const Group& g, const Graph& graph) {
  const auto check = analyze_pnq(g);
  if (!check.structure) throw NotApplicable(check.failed_condition);
  const auto& s = *check.structure;

  const Element core_gen = smallest_generator(g, s.core);
  Element q_elem = 1;
  while (g.element_order(q_elem) != s.q) ++q_elem;
  const Element x = g.multiply(core_gen, q_elem);
  if (g.element_order(x) != s.core.size() * s.q) {
    throw Error("p^n q coloring: (core)Q is not cyclic of order p^(n-1) q");
  }

  std::set<Edge> first;
  for (std::size_t i = 0; i < s.sylow_p.size(); ++i) {
    const auto generators = generator_class(g, smallest_generator(g, s.sylow_p[i]));
    // u_i: the (i+1)-th smallest nonidentity element of the core, for i < q-1.
    const bool has_u = i + 1 < s.q;
    const Element u = has_u ? s.core.at(i + 1) : 0;
    for (auto y : generators) {
      first.insert(make_edge(0, y));
      if (has_u) first.insert(make_edge(u, y));
    }
  }
  for (const auto& e : e1_edge_set(g, x)) first.insert(e);
  return two_coloring(graph, first);
}

std::string_view construction_name(Construction c) {
  switch (c) {
    case Construction::MaxM3:
      return "max-m3";
    case Construction::Cyclic2:
      return "cyclic2";
    case Construction::Q8Zn:
      return "q8zn";
    case Construction::Pnq:
      return "pnq";
  }
  return "?";
}

std::optional<Construction> parse_construction(std::string_view name) {
  for (auto c : kAllConstructions) {
    if (construction_name(c) == name) return c;
  }
  return std::nullopt;
}

EdgeColoring construct_coloring(Construction c, const Group& g, const Graph& graph) {
  switch (c) {
    case Construction::MaxM3:
      return coloring_max_m3(g, graph);
    case Construction::Cyclic2:
      return coloring_cyclic_2(g, graph);
    case Construction::Q8Zn:
      return coloring_q8zn(g, graph);
    case Construction::Pnq:
      return coloring_pnq(g, graph);
  }
  throw Error("unknown construction");
}

}  // namespace rcpower
