#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcpower/group_spec.hpp"

namespace rcpower {

using Element = std::uint32_t;

/// A finite group stored as a full multiplication table over 0..n-1.
/// Element 0 is the identity. Immutable after construction.
class Group {
 public:
  /// Checks the Latin-square, identity and inverse axioms (not associativity;
  /// see check_associative) and caches inverses and element orders.
  Group(std::string name, std::uint32_t order, std::vector<Element> table,
        std::vector<std::string> labels);

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, std::uint64_t k) const;
  std::uint32_t element_order(Element a) const { return orders_[a]; }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  std::span<const Element> table() const { return table_; }
  std::span<const std::uint32_t> element_orders() const { return orders_; }

 private:
  std::string name_;
  std::uint32_t order_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
};

/// Throws InvalidSpec or NotAGroup.
Group build_group(const GroupSpec& spec);

/// Full O(n^3) associativity check.
bool check_associative(const Group& g);

/// <x> as a sorted element list.
std::vector<Element> cyclic_subgroup(const Group& g, Element x);

/// [x] = {y : <y> = <x>}, sorted ascending; has euler_phi(|x|) members.
std::vector<Element> generator_class(const Group& g, Element x);

/// Involutions whose only containing cyclic subgroup is the one they generate.
std::vector<Element> maximal_involutions(const Group& g);

/// s_p(G): number of subgroups of order p. Zero when p does not divide |G|.
/// Throws NotPrime.
std::uint64_t count_order_p_subgroups(const Group& g, std::uint64_t p);

/// Every pair of elements with coprime orders commutes.
bool is_nilpotent(const Group& g);

bool is_cyclic(const Group& g);
bool is_abelian(const Group& g);

/// Cyclic subgroups not properly contained in another cyclic subgroup, each as
/// a sorted element list; ordered by their smallest generator index.
std::vector<std::vector<Element>> maximal_cyclic_subgroups(const Group& g);

/// Distinct cyclic subgroups of order d, ordered by smallest generator index.
std::vector<std::vector<Element>> cyclic_subgroups_of_order(const Group& g, std::uint32_t d);

}  // namespace rcpower
