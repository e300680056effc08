#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "updag/dag.hpp"
#include "updag/generators.hpp"
#include "updag/outerpath.hpp"
#include "updag/rational.hpp"

using namespace updag;

TEST_CASE("parse simple dag") {
  Dag g = parse_dag("3 2\n0 1\n1 2\n");
  CHECK(g.n == 3);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("parse with comments and round trip") {
  Dag g = parse_dag("# a comment\n4 3\n2 3\n0 1\n# mid\n1 2\n");
  std::string s = serialize_dag(g);
  CHECK(s == "4 3\n0 1\n1 2\n2 3\n");
  Dag h = parse_dag(s);
  CHECK(serialize_dag(h) == s);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_dag("2 1\n0 0\n"), "line 2: self-loop", Error);
  try {
    parse_dag("2 2\n0 1\n0 1\n");
    FAIL("expected duplicate edge error");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::Parse);
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_dag("2 1\n0 5\n"), Error);
  CHECK_THROWS_AS(parse_dag("garbage\n"), Error);
  CHECK_THROWS_AS(parse_dag("3 2\n0 1\n"), Error);
}

TEST_CASE("linear extension of a path") {
  Dag g(3, {{0, 1}, {1, 2}});
  auto le = linear_extension(g);
  CHECK(le.order == std::vector<int>{0, 1, 2});
  CHECK(le.rank == std::vector<int>{0, 1, 2});
}

TEST_CASE("linear extension cycle witness") {
  Dag g(2, {{0, 1}, {1, 0}});
  try {
    linear_extension(g);
    FAIL("expected cycle");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::CyclicGraph);
    CHECK(e.witness == std::vector<int>{0, 1, 0});
  }
}

TEST_CASE("linear extension property on a generated graph") {
  Dag g = gen_pathwidth2(1);
  CHECK(g.m() == 52);
  auto le = linear_extension(g);
  for (auto& [u, v] : g.edges) CHECK(le.rank[u] < le.rank[v]);
}

TEST_CASE("blocks of a triangle") {
  Dag g(3, {{0, 1}, {0, 2}, {1, 2}});
  auto bs = blocks(g);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].dag.n == 3);
  CHECK(bs[0].dag.m() == 3);
}

TEST_CASE("blocks share a cut vertex") {
  // two triangles sharing vertex 0
  Dag g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  auto bs = blocks(g);
  REQUIRE(bs.size() == 2);
  int with0 = 0;
  for (auto& b : bs) {
    CHECK(b.dag.m() == 3);
    if (std::count(b.vertex_map.begin(), b.vertex_map.end(), 0)) with0++;
  }
  CHECK(with0 == 2);
}

TEST_CASE("blocks of a path are single edges") {
  Dag g(4, {{0, 1}, {1, 2}, {2, 3}});
  auto bs = blocks(g);
  CHECK(bs.size() == 3);
  for (auto& b : bs) CHECK(b.dag.m() == 1);
}

TEST_CASE("blocks partition the edge set") {
  Dag g = gen_pathwidth2(1);
  auto bs = blocks(g);
  size_t total = 0;
  for (auto& b : bs) total += b.dag.edges.size();
  CHECK(total == g.edges.size());
  for (size_t i = 0; i < bs.size(); i++)
    for (size_t j = i + 1; j < bs.size(); j++) {
      std::set<int> a(bs[i].vertex_map.begin(), bs[i].vertex_map.end());
      int shared = 0;
      for (int v : bs[j].vertex_map) shared += a.count(v);
      CHECK(shared <= 1);
    }
}

TEST_CASE("blocks rejects disconnected input") {
  Dag g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(blocks(g), Error);
}

TEST_CASE("rational helpers") {
  CHECK(rat_to_string(Rat(3, 6)) == "1/2");
  CHECK(rat_from_string("7/2") == Rat(7, 2));
  CHECK(rat_from_string("-3") == Rat(-3));
  CHECK(rat_floor(Rat(-3, 2)) == -2);
  CHECK(rat_floor(Rat(3, 2)) == 1);
  Rat d = dyadic_between(Rat(1, 3), Rat(1, 2));
  CHECK(d > Rat(1, 3));
  CHECK(d < Rat(1, 2));
  CHECK((just_below(Rat(5)) < Rat(5) && just_below(Rat(5)) > Rat(4)));
}

TEST_CASE("outerpath structure of a fan") {
  // directed acyclic fan: center 0 adjacent to path 1-2-3-4
  Dag g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  auto st = outerpath_structure(g);
  REQUIRE(st.backbone.size() == 1);
  CHECK(st.backbone[0] == 0);
  for (int v = 1; v < 5; v++) CHECK(st.fan_assignment[v] == 0);
  CHECK(st.added_edges.empty());
  CHECK(st.augmented.m() == g.m());
}

TEST_CASE("outerpath structure rejects K4") {
  Dag g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  try {
    outerpath_structure(g);
    FAIL("expected NotAnOuterpath");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotAnOuterpath);
  }
}

TEST_CASE("outerpath structure triangulates and stays acyclic") {
  // hexagon, directed by vertex order
  Dag g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto st = outerpath_structure(g);
  CHECK(st.added_edges.size() == 3);
  CHECK(st.augmented.m() == 9);
  CHECK(is_acyclic_dag(st.augmented));
  Dag back = st.augmented;
  back.edges.resize(back.edges.size() - st.added_edges.size());
  auto a = back.edges, b = g.edges;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(st.triangles.size() == 4);
}

TEST_CASE("outerpath structure handles trees via augmentation") {
  Dag g(4, {{0, 1}, {1, 2}, {2, 3}});
  auto st = outerpath_structure(g);
  CHECK(is_acyclic_dag(st.augmented));
  CHECK(st.augmented.connected());
  for (auto& e : g.edges) CHECK(st.augmented.has_edge(e.first, e.second));
}

TEST_CASE("is_fan recognizes fans and rejects non-fans") {
  Dag fan(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  std::vector<int> order;
  CHECK(is_fan(fan, 0, &order));
  CHECK(order.size() == 3);
  CHECK(find_fan_center(fan) == 0);
  Dag square(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(find_fan_center(square) == -1);
}
