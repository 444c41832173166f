#include "rcpower/recognizers.hpp"

#include <algorithm>

#include "rcpower/number_theory.hpp"

namespace rcpower {

std::optional<std::uint64_t> is_q8_times_zn(const Group& g) {
  const auto order = g.order();
  if (order % 8 != 0 || (order / 8) % 2 == 0) return std::nullopt;
  const std::uint64_t n = order / 8;
  const auto orders = g.element_orders();
  if (std::count(orders.begin(), orders.end(), 2U) != 1) return std::nullopt;
  if (!is_nilpotent(g)) return std::nullopt;
  const auto maximal = maximal_cyclic_subgroups(g);
  if (maximal.size() != 3) return std::nullopt;
  for (const auto& h : maximal) {
    if (h.size() != 4 * n) return std::nullopt;
  }
  return n;
}

PnqCheck analyze_pnq(const Group& g) {
  PnqCheck out;
  const auto fail = [&out](std::string why) {
    out.failed_condition = std::move(why);
    return out;
  };
  const auto factors = factorize(g.order());
  if (factors.size() != 2 || factors[1].second != 1) {
    return fail("order is not p^n q with primes p < q");
  }
  PnqStructure s;
  s.p = factors[0].first;
  s.n = factors[0].second;
  s.q = factors[1].first;
  std::uint64_t sylow_order = 1;
  for (unsigned i = 0; i < s.n; ++i) sylow_order *= s.p;

  // Sylow p-subgroups are conjugate, so they are all cyclic iff one is, i.e.
  // iff some element has order p^n; they are then exactly the cyclic
  // subgroups of that order.
  s.sylow_p = cyclic_subgroups_of_order(g, static_cast<std::uint32_t>(sylow_order));
  if (s.sylow_p.empty()) return fail("(i) Sylow " + std::to_string(s.p) + "-subgroups are not cyclic");
  if (s.sylow_p.size() != s.q) {
    return fail("(i) number of Sylow " + std::to_string(s.p) + "-subgroups is " +
                std::to_string(s.sylow_p.size()) + ", not q=" + std::to_string(s.q));
  }
  if (count_order_p_subgroups(g, s.q) != 1) {
    return fail("(i) Sylow " + std::to_string(s.q) + "-subgroup is not unique");
  }
  s.core = s.sylow_p.front();
  for (const auto& h : s.sylow_p) {
    std::vector<Element> meet;
    std::set_intersection(s.core.begin(), s.core.end(), h.begin(), h.end(), std::back_inserter(meet));
    s.core = std::move(meet);
  }
  const std::uint64_t core_order = sylow_order / s.p;
  if (s.core.size() != core_order) {
    return fail("(ii) intersection of Sylow " + std::to_string(s.p) + "-subgroups has order " +
                std::to_string(s.core.size()) + ", not p^(n-1)=" + std::to_string(core_order));
  }
  if (core_order < s.q) {
    return fail("(iii) p^(n-1)=" + std::to_string(core_order) + " < q=" + std::to_string(s.q));
  }
  out.structure = std::move(s);
  return out;
}

}  // namespace rcpower
