#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcpower/group.hpp"

namespace rcpower {

/// Structural test for G = Q_8 x Z_n with n odd: |G| = 8n, G nilpotent, a
/// unique involution, and exactly three maximal cyclic subgroups, each of
/// order 4n. Returns n on success.
std::optional<std::uint64_t> is_q8_times_zn(const Group& g);

/// Data behind the p^n q two-coloring: |G| = p^n q (p < q primes), q cyclic
/// Sylow p-subgroups, a unique Sylow q-subgroup, the Sylow p-subgroups meeting
/// in a subgroup of order p^(n-1), and p^(n-1) >= q.
struct PnqStructure {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned n = 0;
  std::vector<std::vector<Element>> sylow_p;  // ordered by smallest generator
  std::vector<Element> core;                  // intersection of the sylow_p, sorted
};

struct PnqCheck {
  std::optional<PnqStructure> structure;
  std::string failed_condition;  // empty when structure is set
};

PnqCheck analyze_pnq(const Group& g);

}  // namespace rcpower
