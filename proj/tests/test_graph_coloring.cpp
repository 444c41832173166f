#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "oracles.hpp"
#include "rcpower/certificate_io.hpp"
#include "rcpower/coloring.hpp"
#include "rcpower/dot_export.hpp"
#include "rcpower/errors.hpp"
#include "rcpower/group.hpp"
#include "rcpower/number_theory.hpp"
#include "rcpower/power_graph.hpp"

using namespace rcpower;

namespace {

Group make(const char* spec) { return build_group(parse_group_spec(spec)); }

const char* const kSpecs[] = {"Z:1",  "Z:2",  "Z:7",       "Z:8",       "Z:12",      "D:6",
                              "D:16", "Q:8",  "Q:12",      "Q:20",      "E2:4",      "SD:9,7,2",
                              "Q:8 x Z:3",    "Z:2 x Z:4", "D:6 x Z:3", "Z:3 x Z:3"};

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
  return Graph(n, e);
}

}  // namespace

TEST_CASE("graph container") {
  const Graph g(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.edge_id(2, 1) == 2);
  CHECK_FALSE(g.find_edge(2, 3).has_value());
  CHECK_THROWS_AS(g.edge_id(2, 3), std::out_of_range);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK(g.label(3) == "3");
  CHECK(diameter(g) == 3);
  CHECK(pendant_vertices(g) == std::vector<Vertex>{2, 3});
  CHECK(diameter(Graph(3, {{0, 1}})) == -1);
  CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}

TEST_CASE("power graph against the naive oracle") {
  for (const char* s : kSpecs) {
    CAPTURE(s);
    const Group grp = make(s);
    const Graph g = build_power_graph(grp);
    const auto expect = oracle::power_graph_edges(grp);
    CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expect);
    const Graph serial = build_power_graph_serial(grp);
    CHECK(std::vector<Edge>(serial.edges().begin(), serial.edges().end()) == expect);
    CHECK(g.label(0) == grp.label(0));
  }
}

TEST_CASE("power graph structure") {
  SUBCASE("D:6 is a triangle-with-pendants star") {
    const Group grp = make("D:6");
    const Graph g = build_power_graph(grp);
    CHECK(g.edge_count() == 6);
    CHECK(pendant_vertices(g) == maximal_involutions(grp));
    CHECK(pendant_vertices(g).size() == 3);
  }
  SUBCASE("identity is universal; diameter at most 2") {
    for (const char* s : kSpecs) {
      const Graph g = build_power_graph(make(s));
      CHECK(g.degree(0) == g.vertex_count() - 1);
      CHECK(diameter(g) <= 2);
    }
  }
  SUBCASE("generator classes are cliques") {
    for (const char* s : kSpecs) {
      const Group grp = make(s);
      const Graph g = build_power_graph(grp);
      for (Element x = 0; x < grp.order(); ++x)
        for (Element y : generator_class(grp, x))
          if (y != x) CHECK(g.adjacent(x, y));
    }
  }
  SUBCASE("complete iff cyclic of prime-power order") {
    for (const char* s : kSpecs) {
      CAPTURE(s);
      const Group grp = make(s);
      const Graph g = build_power_graph(grp);
      CHECK(is_complete(g) == (is_cyclic(grp) && is_prime_power(grp.order())));
    }
  }
  SUBCASE("pendants are maximal involutions") {
    for (const char* s : kSpecs) {
      const Group grp = make(s);
      if (grp.order() < 3) continue;
      CHECK(pendant_vertices(build_power_graph(grp)) == maximal_involutions(grp));
    }
  }
  SUBCASE("K4 from Z:4, star from E2:2") {
    CHECK(is_complete(build_power_graph(make("Z:4"))));
    const Graph star = build_power_graph(make("E2:2"));
    CHECK(star.edge_count() == 3);
    CHECK(pendant_vertices(star).size() == 3);
  }
}

TEST_CASE("rainbow checker examples") {
  const Graph p3 = path_graph(3);
  CHECK(static_cast<bool>(is_rainbow_connected(p3, {2, {1, 2}})));
  const auto fail = is_rainbow_connected(p3, {2, {1, 1}});
  REQUIRE(fail.failing.has_value());
  CHECK(*fail.failing == FailingPair{0, 2});
  CHECK_FALSE(static_cast<bool>(is_rainbow_connected(p3, {1, {1, 1}})));

  // C4: opposite vertices need a two-colored path on one side.
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(static_cast<bool>(is_rainbow_connected(c4, {2, {1, 2, 2, 1}})));
  CHECK_FALSE(static_cast<bool>(is_rainbow_connected(c4, {2, {1, 1, 2, 2}})));

  const auto ok = is_rainbow_connected(c4, {2, {1, 2, 2, 1}});
  CHECK(ok.certificate.paths.size() == 6);
  CHECK(replay_certificate(c4, {2, {1, 2, 2, 1}}, ok.certificate));
  CHECK(find_rainbow_path(c4, {2, {1, 2, 2, 1}}, 0, 2).has_value());
  CHECK_THROWS_AS(validate_coloring(c4, {2, {1, 3, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_coloring(c4, {2, {1, 2, 1}}), std::invalid_argument);
}

TEST_CASE("replay rejects bad certificates") {
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const EdgeColoring c{2, {1, 2, 2, 1}};
  const auto good = is_rainbow_connected(c4, c).certificate;
  auto bad = good;
  bad.paths.pop_back();
  CHECK_FALSE(replay_certificate(c4, c, bad));
  bad = good;
  std::swap(bad.paths[0], bad.paths[1]);
  CHECK_FALSE(replay_certificate(c4, c, bad));
  bad = good;
  bad.paths[1].path = {0, 1, 2, 3, 0, 2};  // (0,2) via a non-simple walk
  CHECK_FALSE(replay_certificate(c4, c, bad));
  bad = good;
  bad.paths[1].path = {0, 2};  // not an edge
  CHECK_FALSE(replay_certificate(c4, c, bad));
  CHECK_FALSE(replay_certificate(c4, {2, {1, 1, 2, 2}}, good));
}

TEST_CASE("rainbow checker matches all-paths oracle on small power graphs") {
  // All groups of order <= 8 up to isomorphism, in every family that reaches them.
  const char* small[] = {"Z:1", "Z:2", "Z:3", "Z:4", "E2:2", "Z:5", "Z:6",       "D:6",
                         "Z:7", "Z:8", "Q:8", "D:8", "E2:3", "Z:2 x Z:4"};
  std::mt19937 rng(20260101);
  for (const char* s : small) {
    CAPTURE(s);
    const Graph g = build_power_graph(make(s));
    for (int k = 1; k <= 4; ++k) {
      std::uniform_int_distribution<int> col(1, k);
      for (int trial = 0; trial < 40; ++trial) {
        EdgeColoring c{k, std::vector<int>(g.edge_count())};
        for (int& x : c.colors) x = col(rng);
        const auto par = is_rainbow_connected(g, c);
        const auto ser = is_rainbow_connected_serial(g, c);
        CHECK(static_cast<bool>(par) == oracle::rainbow_connected(g, c));
        CHECK(par.failing == ser.failing);
        CHECK(par.certificate == ser.certificate);
        if (par) CHECK(replay_certificate(g, c, par.certificate));
      }
    }
  }
}

TEST_CASE("parallel and serial checkers agree on larger graphs") {
  std::mt19937 rng(7);
  for (const char* s : {"Q:20", "SD:9,7,2", "D:16", "Q:8 x Z:3"}) {
    const Graph g = build_power_graph(make(s));
    for (int k : {2, 3}) {
      std::uniform_int_distribution<int> col(1, k);
      EdgeColoring c{k, std::vector<int>(g.edge_count())};
      for (int& x : c.colors) x = col(rng);
      const auto a = is_rainbow_connected(g, c);
      const auto b = is_rainbow_connected_serial(g, c);
      CHECK(a.failing == b.failing);
      CHECK(a.certificate == b.certificate);
    }
  }
}

TEST_CASE("certificate document round trip") {
  std::mt19937 rng(99);
  for (const char* s : {"Z:6", "D:6", "Q:8", "Z:2 x Z:4"}) {
    const Graph g = build_power_graph(make(s));
    for (int trial = 0; trial < 10; ++trial) {
      const int k = 1 + trial % 5;
      std::uniform_int_distribution<int> col(1, k);
      EdgeColoring c{k, std::vector<int>(g.edge_count())};
      for (int& x : c.colors) x = col(rng);
      const auto check = is_rainbow_connected(g, c);
      const auto doc = make_document(g, c, check ? &check.certificate : nullptr);
      const std::string text = write_document(doc);
      const auto back = parse_document(text);
      CHECK(back == doc);
      CHECK(write_document(back) == text);
      CHECK(coloring_from_document(g, back) == c);
      if (check) CHECK(certificate_from_document(back) == check.certificate);
    }
  }
}

TEST_CASE("certificate document format errors") {
  const Graph p3 = path_graph(3);
  CHECK(write_document(make_document(p3, {2, {1, 2}})) == "k=2 edges=2\n0 1 1\n1 2 2\n");
  for (const char* bad : {"", "k=2\n", "k=2 edges=2\n0 1 1\n", "k=2 edges=1\n0 1 3\n",
                          "k=2 edges=1\n0 1 1\n1 2 2\n", "k=2 edges=1\n0 1 1 \n",
                          "k=2 edges=1\n0 1 1\npair 0 1 0 1\n", "k=0 edges=0\n",
                          "k=2 edges=1\n0 1 x\n", "k=2 edges=1\n1 0 1\n"}) {
    std::string shown = bad;
    std::replace(shown.begin(), shown.end(), '\n', '/');
    CAPTURE(shown);
    CHECK_THROWS_AS(parse_document(bad), FormatError);
  }
  const auto doc = parse_document("k=2 edges=1\n0 2 1\n");
  CHECK_THROWS_AS(coloring_from_document(p3, doc), FormatError);
}

TEST_CASE("dot export") {
  const Group grp = make("Z:3");
  const Graph g = build_power_graph(grp);
  const EdgeColoring c{1, {1, 1, 1}};
  const std::string plain = to_dot(g);
  CHECK(plain.rfind("graph power_graph {\n", 0) == 0);
  CHECK(plain.find("0 -- 1;") != std::string::npos);
  CHECK(plain.find("[color") == std::string::npos);
  const std::string colored = to_dot(g, &c);
  CHECK(colored.find("1 -- 2 [color=1];") != std::string::npos);
  CHECK(colored.find("0 [label=\"" + grp.label(0) + "\"];") != std::string::npos);
  CHECK(colored.back() == '\n');
}
