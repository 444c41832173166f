#include "rcpower/group.hpp"

#include <algorithm>
#include <numeric>

#include "rcpower/errors.hpp"
#include "rcpower/number_theory.hpp"

namespace rcpower {

namespace {

std::string power_word(const std::string& gen, std::uint64_t k) {
  if (k == 0) return {};
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

struct TableBuilder {
  std::uint32_t order = 0;
  std::vector<Element> table;
  std::vector<std::string> labels;
};

template <class Mul>
TableBuilder tabulate(std::uint32_t n, Mul mul, std::vector<std::string> labels) {
  TableBuilder b;
  b.order = n;
  b.table.resize(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) b.table[std::size_t{i} * n + j] = mul(i, j);
  }
  labels[0] = "e";
  b.labels = std::move(labels);
  return b;
}

TableBuilder cyclic_table(std::uint32_t n) {
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = power_word("x", i);
  return tabulate(n, [n](Element a, Element b) { return (a + b) % n; }, std::move(labels));
}

// a^i b^s  ->  s*n + i, with b a = a^{-1} b.
TableBuilder dihedral_table(std::uint32_t order) {
  const std::uint32_t n = order / 2;
  std::vector<std::string> labels(order);
  for (std::uint32_t s = 0; s < 2; ++s) {
    for (std::uint32_t i = 0; i < n; ++i) labels[s * n + i] = power_word("a", i) + (s ? "b" : "");
  }
  const auto mul = [n](Element x, Element y) {
    const std::uint32_t i = x % n, s = x / n, j = y % n, t = y / n;
    const std::uint32_t rot = s ? (i + n - j) % n : (i + j) % n;
    return (s ^ t) * n + rot;
  };
  return tabulate(order, mul, std::move(labels));
}

// x^i y^s  ->  s*2n + i, with y^2 = x^n and y x = x^{-1} y.
TableBuilder quaternion_table(std::uint32_t order) {
  const std::uint32_t n = order / 4;
  const std::uint32_t big = 2 * n;
  std::vector<std::string> labels(order);
  for (std::uint32_t s = 0; s < 2; ++s) {
    for (std::uint32_t i = 0; i < big; ++i) labels[s * big + i] = power_word("x", i) + (s ? "y" : "");
  }
  const auto mul = [n, big](Element a, Element b) -> Element {
    const std::uint32_t i = a % big, s = a / big, j = b % big, t = b / big;
    if (s == 0) return t * big + (i + j) % big;
    if (t == 0) return big + (i + big - j) % big;
    return (i + big - j + n) % big;
  };
  return tabulate(order, mul, std::move(labels));
}

TableBuilder elementary_abelian2_table(std::uint32_t rank) {
  const std::uint32_t n = 1U << rank;
  std::vector<std::string> labels(n);
  for (std::uint32_t v = 1; v < n; ++v) {
    for (std::uint32_t bit = 0; bit < rank; ++bit) {
      if (v & (1U << bit)) labels[v] += "g" + std::to_string(bit + 1);
    }
  }
  return tabulate(n, [](Element a, Element b) { return a ^ b; }, std::move(labels));
}

// a^i b^j  ->  i*k + j, with a^{-1} b a = b^t, so b^j a^i = a^i b^{j t^i}.
TableBuilder semidirect_table(std::uint32_t m, std::uint32_t k, std::uint32_t t) {
  std::vector<std::uint64_t> t_pow(m);
  for (std::uint32_t i = 0; i < m; ++i) t_pow[i] = pow_mod(t, i, k);
  std::vector<std::string> labels(std::size_t{m} * k);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) labels[i * k + j] = power_word("a", i) + power_word("b", j);
  }
  const auto mul = [m, k, &t_pow](Element x, Element y) {
    const std::uint32_t i = x / k, j = x % k, i2 = y / k, j2 = y % k;
    const auto b = static_cast<std::uint32_t>((j * t_pow[i2] + j2) % k);
    return ((i + i2) % m) * k + b;
  };
  return tabulate(m * k, mul, std::move(labels));
}

TableBuilder raw_table(const GroupSpec& spec) {
  const std::uint32_t n = spec.table_order;
  const auto& t = spec.table;
  std::uint32_t id = n;
  for (std::uint32_t r = 0; r < n && id == n; ++r) {
    bool ok = true;
    for (std::uint32_t j = 0; j < n && ok; ++j) ok = t[std::size_t{r} * n + j] == j && t[std::size_t{j} * n + r] == j;
    if (ok) id = r;
  }
  if (id == n) throw NotAGroup(spec.to_string() + ": no identity element");
  // Swap the identity into index 0.
  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Element{0});
  std::swap(relabel[0], relabel[id]);
  TableBuilder b;
  b.order = n;
  b.table.resize(std::size_t{n} * n);
  b.labels.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    b.labels[relabel[i]] = "g" + std::to_string(i);
    for (std::uint32_t j = 0; j < n; ++j) {
      b.table[std::size_t{relabel[i]} * n + relabel[j]] = relabel[t[std::size_t{i} * n + j]];
    }
  }
  b.labels[0] = "e";
  return b;
}

TableBuilder product_table(const std::vector<TableBuilder>& parts) {
  std::uint32_t n = 1;
  for (const auto& p : parts) n *= p.order;
  std::vector<std::uint32_t> stride(parts.size());
  std::uint32_t s = 1;
  for (std::size_t f = parts.size(); f-- > 0;) {
    stride[f] = s;
    s *= parts[f].order;
  }
  TableBuilder b;
  b.order = n;
  b.labels.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::string label = "(";
    for (std::size_t f = 0; f < parts.size(); ++f) {
      if (f) label += ", ";
      label += parts[f].labels[(x / stride[f]) % parts[f].order];
    }
    b.labels[x] = label + ")";
  }
  b.table.resize(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      Element z = 0;
      for (std::size_t f = 0; f < parts.size(); ++f) {
        const std::uint32_t m = parts[f].order;
        const std::uint32_t a = (x / stride[f]) % m, c = (y / stride[f]) % m;
        z += parts[f].table[std::size_t{a} * m + c] * stride[f];
      }
      b.table[std::size_t{x} * n + y] = z;
    }
  }
  return b;
}

TableBuilder build_table(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Cyclic:
      return cyclic_table(static_cast<std::uint32_t>(spec.params[0]));
    case Family::Dihedral:
      return dihedral_table(static_cast<std::uint32_t>(spec.params[0]));
    case Family::Quaternion:
      return quaternion_table(static_cast<std::uint32_t>(spec.params[0]));
    case Family::ElementaryAbelian2:
      return elementary_abelian2_table(static_cast<std::uint32_t>(spec.params[0]));
    case Family::SemidirectCyclic:
      return semidirect_table(static_cast<std::uint32_t>(spec.params[0]),
                              static_cast<std::uint32_t>(spec.params[1]),
                              static_cast<std::uint32_t>(spec.params[2]));
    case Family::RawTable:
      return raw_table(spec);
    case Family::DirectProduct: {
      std::vector<TableBuilder> parts;
      for (const auto& f : spec.factors) parts.push_back(build_table(f));
      return product_table(parts);
    }
  }
  throw InvalidSpec("unknown family");
}

}  // namespace

Group::Group(std::string name, std::uint32_t order, std::vector<Element> table,
             std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = order_;
  if (n == 0 || table_.size() != n * n) throw NotAGroup(name_ + ": table must be n x n with n >= 1");
  if (labels_.size() != n) throw NotAGroup(name_ + ": one label per element required");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i] != i || table_[i * n] != i) throw NotAGroup(name_ + ": element 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = table_[r * n + c];
      if (v >= n || seen[v]) throw NotAGroup(name_ + ": table is not a Latin square");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const auto v = table_[r * n + c];
      if (seen[v]) throw NotAGroup(name_ + ": table is not a Latin square");
      seen[v] = 1;
    }
  }
  inverses_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == 0) {
        if (table_[b * n + a] != 0) throw NotAGroup(name_ + ": element has no two-sided inverse");
        inverses_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  orders_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Element x = static_cast<Element>(a);
    std::uint32_t k = 1;
    while (x != 0) {
      x = multiply(x, static_cast<Element>(a));
      if (++k > n) throw NotAGroup(name_ + ": element of infinite order");
    }
    orders_[a] = k;
  }
}

Element Group::power(Element a, std::uint64_t k) const {
  k %= orders_[a];
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1U;
  }
  return result;
}

Group build_group(const GroupSpec& spec) {
  validate(spec);
  auto b = build_table(spec);
  Group g(spec.to_string(), b.order, std::move(b.table), std::move(b.labels));
  const bool has_raw = spec.family == Family::RawTable ||
                       std::any_of(spec.factors.begin(), spec.factors.end(),
                                   [](const GroupSpec& f) { return f.family == Family::RawTable; });
  if (has_raw && !check_associative(g)) throw NotAGroup(spec.to_string() + ": not associative");
  return g;
}

bool check_associative(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.multiply(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) return false;
      }
    }
  }
  return true;
}

std::vector<Element> cyclic_subgroup(const Group& g, Element x) {
  std::vector<Element> out{0};
  for (Element y = x; y != 0; y = g.multiply(y, x)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> generator_class(const Group& g, Element x) {
  const std::uint32_t n = g.element_order(x);
  std::vector<Element> out;
  Element y = 0;
  for (std::uint32_t j = 1; j <= n; ++j) {
    y = g.multiply(y, x);
    if (std::gcd(j, n) == 1) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> maximal_involutions(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  std::vector<char> covered(n, 0);
  for (Element y = 0; y < n; ++y) {
    const auto k = g.element_order(y);
    if (k > 2 && k % 2 == 0) covered[g.power(y, k / 2)] = 1;
  }
  std::vector<Element> out;
  for (Element x = 0; x < n; ++x) {
    if (g.element_order(x) == 2 && !covered[x]) out.push_back(x);
  }
  return out;
}

std::uint64_t count_order_p_subgroups(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return 0;
  const auto orders = g.element_orders();
  const auto count = std::count(orders.begin(), orders.end(), p);
  return static_cast<std::uint64_t>(count) / (p - 1);
}

bool is_nilpotent(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 1; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (std::gcd(g.element_order(a), g.element_order(b)) != 1) continue;
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const Group& g) {
  const auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

bool is_abelian(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

namespace {

// Smallest-index generator of each cyclic subgroup, ascending.
std::vector<Element> class_representatives(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  std::vector<char> done(n, 0);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (auto y : generator_class(g, x)) done[y] = 1;
  }
  return reps;
}

}  // namespace

std::vector<std::vector<Element>> maximal_cyclic_subgroups(const Group& g) {
  const auto n = g.order();
  const auto reps = class_representatives(g);
  std::vector<std::vector<char>> member(reps.size(), std::vector<char>(n, 0));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (auto y : cyclic_subgroup(g, reps[i])) member[i][y] = 1;
  }
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < reps.size() && maximal; ++j) {
      if (g.element_order(reps[j]) > g.element_order(reps[i]) && member[j][reps[i]]) maximal = false;
    }
    if (maximal) out.push_back(cyclic_subgroup(g, reps[i]));
  }
  return out;
}

std::vector<std::vector<Element>> cyclic_subgroups_of_order(const Group& g, std::uint32_t d) {
  std::vector<std::vector<Element>> out;
  for (auto r : class_representatives(g)) {
    if (g.element_order(r) == d) out.push_back(cyclic_subgroup(g, r));
  }
  return out;
}

}  // namespace rcpower
