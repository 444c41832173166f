#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>

#include "rcpower/errors.hpp"
#include "rcpower/group.hpp"
#include "rcpower/group_spec.hpp"
#include "rcpower/number_theory.hpp"

using namespace rcpower;

namespace {

Group make(const char* spec) { return build_group(parse_group_spec(spec)); }

// Small test groups covering every family and a few products.
const char* const kSpecs[] = {"Z:1",       "Z:2",       "Z:6",       "Z:12",      "D:6",
                              "D:10",      "D:16",      "Q:8",       "Q:12",      "Q:16",
                              "E2:3",      "SD:27,7,2", "SD:4,3,2",  "SD:8,3,2",  "Z:2 x Z:4",
                              "Q:8 x Z:3", "D:6 x Z:2", "Z:3 x Z:3", "E2:2 x Z:3"};

std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("number theory against naive definitions") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    CHECK(divisors(n) == divs);
    CHECK(euler_phi(n) == naive_phi(n));
    const bool prime = divs.size() == 2;
    CHECK(is_prime(n) == prime);
    const auto f = factorize(n);
    CHECK(is_prime_power(n) == (f.size() <= 1));
    std::uint64_t prod = 1;
    for (auto [p, e] : f)
      for (unsigned i = 0; i < e; ++i) prod *= p;
    CHECK(prod == n);
    // Every divisor other than 1 and n needs its own generators.
    if (n >= 2) CHECK(euler_phi(n) + 2 >= divs.size());
  }
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(pow_mod(2, 27, 7) == 1);
  CHECK(pow_mod(3, 0, 5) == 1);
}

TEST_CASE("spec parsing and round trip") {
  CHECK(parse_group_spec("Z:6").to_string() == "Z:6");
  CHECK(parse_group_spec("  Q:8   x  Z:3 ").to_string() == "Q:8 x Z:3");
  CHECK(parse_group_spec("SD:27,7,2").to_string() == "SD:27,7,2");
  const auto nested = GroupSpec::direct_product(
      {GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}),
       GroupSpec::cyclic(5)});
  CHECK(nested.factors.size() == 3);
  for (const char* s : kSpecs) CHECK(parse_group_spec(s).to_string() == s);
}

TEST_CASE("spec constraints") {
  for (const char* bad : {"D:4", "D:7", "Q:4", "Q:10", "Z:0", "E2:0", "SD:27,7,3", "SD:2,4,2",
                          "Z:6x", "Z:6 x", "x Z:6", "Z:6 Z:3", "W:3", "Z:", "Z:a", "SD:3,7",
                          "Z:4096", ""}) {
    const std::string shown = bad;
    CAPTURE(shown);
    CHECK_THROWS_AS(parse_group_spec(bad), InvalidSpec);
  }
  CHECK_NOTHROW(parse_group_spec("D:6"));
  CHECK_NOTHROW(parse_group_spec("Q:8"));
  CHECK_NOTHROW(parse_group_spec("SD:3,7,2"));
}

TEST_CASE("family tables satisfy the group axioms") {
  for (const char* s : kSpecs) {
    CAPTURE(s);
    const Group g = make(s);
    const auto n = g.order();
    for (Element a = 0; a < n; ++a) {
      std::vector<char> row(n, 0), col(n, 0);
      for (Element b = 0; b < n; ++b) {
        row[g.multiply(a, b)] = 1;
        col[g.multiply(b, a)] = 1;
      }
      CHECK(std::count(row.begin(), row.end(), 1) == static_cast<long>(n));
      CHECK(std::count(col.begin(), col.end(), 1) == static_cast<long>(n));
      CHECK(g.multiply(0, a) == a);
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      CHECK(n % g.element_order(a) == 0);
      CHECK(g.power(a, g.element_order(a)) == 0);
    }
    if (n <= 64) CHECK(check_associative(g));
    CHECK(g.element_order(0) == 1);
  }
}

TEST_CASE("family presentations") {
  SUBCASE("cyclic") {
    const Group g = make("Z:6");
    CHECK(g.order() == 6);
    CHECK(g.element_order(2) == 3);
    CHECK(g.element_order(1) == 6);
    CHECK(is_cyclic(g));
  }
  SUBCASE("quaternion x^n = y^2, x^2n = 1, y^-1 x y = x^-1") {
    const Group g = make("Q:12");
    const Element x = 1, y = 6;
    CHECK(g.label(x) == "x");
    CHECK(g.label(y) == "y");
    CHECK(g.element_order(x) == 6);
    CHECK(g.power(x, 3) == g.power(y, 2));
    CHECK(g.multiply(g.multiply(g.inverse(y), x), y) == g.inverse(x));
    CHECK(maximal_involutions(g).empty());
  }
  SUBCASE("dihedral a^n = b^2 = 1, bab = a^-1") {
    const Group g = make("D:10");
    const Element a = 1, b = 5;
    CHECK(g.label(b) == "b");
    CHECK(g.element_order(a) == 5);
    CHECK(g.element_order(b) == 2);
    CHECK(g.multiply(g.multiply(b, a), b) == g.inverse(a));
  }
  SUBCASE("semidirect a^-1 b a = b^2") {
    const Group g = make("SD:27,7,2");
    CHECK(g.order() == 189);
    const Element a = 7, b = 1;
    CHECK(g.element_order(a) == 27);
    CHECK(g.element_order(b) == 7);
    CHECK(g.multiply(g.multiply(g.inverse(a), b), a) == g.power(b, 2));
    CHECK_FALSE(is_abelian(g));
    CHECK(check_associative(make("SD:9,7,2")));
  }
  SUBCASE("direct product element orders are lcms") {
    const Group a = make("Z:4"), b = make("Z:6"), p = make("Z:4 x Z:6");
    for (Element i = 0; i < 4; ++i)
      for (Element j = 0; j < 6; ++j)
        CHECK(p.element_order(i * 6 + j) == std::lcm(a.element_order(i), b.element_order(j)));
    CHECK_FALSE(is_cyclic(p));
    CHECK(is_cyclic(make("Z:4 x Z:3")));
  }
}

TEST_CASE("cyclic subgroups and generator classes") {
  for (const char* s : kSpecs) {
    CAPTURE(s);
    const Group g = make(s);
    for (Element x = 0; x < g.order(); ++x) {
      const auto sub = cyclic_subgroup(g, x);
      CHECK(sub.size() == g.element_order(x));
      CHECK(std::is_sorted(sub.begin(), sub.end()));
      const auto cls = generator_class(g, x);
      CHECK(cls.size() == euler_phi(g.element_order(x)));
      for (Element y : cls) CHECK(cyclic_subgroup(g, y) == sub);
    }
  }
}

TEST_CASE("maximal involutions") {
  CHECK(maximal_involutions(make("D:6")).size() == 3);
  CHECK(maximal_involutions(make("D:10")).size() == 5);
  CHECK(maximal_involutions(make("D:8")).size() == 4);
  CHECK(maximal_involutions(make("E2:4")).size() == 15);
  CHECK(maximal_involutions(make("Z:2 x Z:4")).size() == 2);
  CHECK(maximal_involutions(make("Z:6")).empty());
  CHECK(maximal_involutions(make("Q:8")).empty());
  CHECK(maximal_involutions(make("Z:2")).size() == 1);
}

TEST_CASE("order-p subgroup counts") {
  CHECK(count_order_p_subgroups(make("D:6"), 2) == 3);
  CHECK(count_order_p_subgroups(make("D:6"), 3) == 1);
  CHECK(count_order_p_subgroups(make("Z:3 x Z:3"), 3) == 4);
  CHECK(count_order_p_subgroups(make("Q:16"), 2) == 1);
  CHECK(count_order_p_subgroups(make("Z:6"), 5) == 0);
  CHECK_THROWS_AS(count_order_p_subgroups(make("Z:6"), 4), NotPrime);
  for (const char* s : kSpecs) {
    const Group g = make(s);
    for (auto p : prime_divisors(g.order())) CHECK(count_order_p_subgroups(g, p) % p == 1);
  }
}

TEST_CASE("nilpotency and maximal cyclic subgroups") {
  CHECK(is_nilpotent(make("Q:16")));
  CHECK(is_nilpotent(make("Q:8 x Z:3")));
  CHECK(is_nilpotent(make("D:8")));
  CHECK_FALSE(is_nilpotent(make("D:6")));
  CHECK_FALSE(is_nilpotent(make("Q:12")));
  CHECK_FALSE(is_nilpotent(make("SD:27,7,2")));
  CHECK(maximal_cyclic_subgroups(make("Q:8")).size() == 3);
  CHECK(maximal_cyclic_subgroups(make("Q:16")).size() == 5);
  CHECK(maximal_cyclic_subgroups(make("Z:12")).size() == 1);
  CHECK(cyclic_subgroups_of_order(make("Q:8"), 4).size() == 3);
  CHECK(cyclic_subgroups_of_order(make("E2:3"), 2).size() == 7);
}

TEST_CASE("raw tables") {
  const std::string z3 = write_temp("rcpower_z3.txt", "3\n0 1 2\n1 2 0\n2 0 1\n");
  const Group g = make(("table:" + z3).c_str());
  CHECK(g.order() == 3);
  CHECK(is_cyclic(g));

  // Identity is element 1 here; it must be moved to index 0.
  const std::string shifted = write_temp("rcpower_shift.txt", "2\n1 0\n0 1\n");
  const Group h = make(("table:" + shifted).c_str());
  CHECK(h.order() == 2);
  CHECK(h.element_order(1) == 2);

  const std::string latin_bad = write_temp("rcpower_bad.txt", "2\n0 1\n1 1\n");
  CHECK_THROWS_AS(make(("table:" + latin_bad).c_str()), NotAGroup);
  // Latin square with identity 0 but not associative (loop of order 5).
  const std::string loop = write_temp("rcpower_loop.txt",
                                      "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
  CHECK_THROWS_AS(make(("table:" + loop).c_str()), NotAGroup);
  const std::string shortfile = write_temp("rcpower_short.txt", "2\n0 1\n1\n");
  CHECK_THROWS_AS(make(("table:" + shortfile).c_str()), InvalidSpec);
  CHECK_THROWS_AS(make("table:/nonexistent/rcpower.txt"), InvalidSpec);
}
