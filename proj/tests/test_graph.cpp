#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "submatch/errors.hpp"
#include "submatch/graph.hpp"
#include "test_support.hpp"

using namespace submatch;

TEST_CASE("graph construction validates simplicity") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), SimplicityViolation);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), SimplicityViolation);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidParameter);
  Graph g(3, {{2, 0}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == std::pair<int, int>{2, 0});  // orientation preserved
  CHECK(g.degree(0) == 2);
  CHECK(g.find_edge(1, 0) == 1);
  CHECK(!g.find_edge(1, 2).has_value());
}

TEST_CASE("components") {
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(components(two_edges).size() == 2);
  CHECK(components(cycle(5)).size() == 1);
  Graph isolated(3, {});
  CHECK(components(isolated).size() == 3);
  CHECK(component_views(two_edges)[1].vertices == std::vector<int>{2, 3});
  CHECK(component_views(two_edges)[1].edge_map == std::vector<int>{1});
}

TEST_CASE("odd vertices") {
  CHECK(odd_vertices(star(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(odd_vertices(cycle(6)).empty());
  CHECK(odd_vertices(path(4)) == std::vector<int>{0, 3});
  // handshake parity on random graphs
  for (int seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected(6, 6 + seed % 9, seed);
    CHECK(odd_vertices(g).size() % 2 == 0);
  }
}

TEST_CASE("euler circuit") {
  Trail c4 = euler_circuit(cycle(4));
  CHECK(c4.length() == 4);
  CHECK(c4.closed());
  c4.validate(cycle(4));

  CHECK_THROWS_AS(euler_circuit(star(4)), NotEulerian);
  CHECK_THROWS_AS(euler_circuit(Graph(2, {})), NotEulerian);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(euler_circuit(two_triangles), NotEulerian);

  Graph bt = testsupport::bowtie();
  Trail t = euler_circuit(bt);
  CHECK(t.length() == 6);
  CHECK(t.closed());
  t.validate(bt);
  std::set<int> covered(t.edges.begin(), t.edges.end());
  CHECK(covered.size() == 6);
}

TEST_CASE("vertex split on the paw gives a path") {
  Graph g = testsupport::paw();
  auto split = vertex_split(g, 0, 1, 3);
  CHECK(split.new_vertex == 4);
  CHECK(split.graph.vertex_count() == 5);
  CHECK(split.graph.edge_count() == 4);
  // expected edge set {bc, ca, a'd, a'b} with a'=4
  CHECK(split.graph.has_edge(1, 2));
  CHECK(split.graph.has_edge(2, 0));
  CHECK(split.graph.has_edge(4, 3));
  CHECK(split.graph.has_edge(4, 1));
  CHECK(is_connected(split.graph));
  // the replaced slots keep their indices
  CHECK(split.edge_origin == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(vertex_split(g, 0, 1, 1), InvalidSplit);
}

TEST_CASE("vertex split missing edge") {
  Graph g = testsupport::paw();
  CHECK_THROWS_AS(vertex_split(g, 3, 0, 1), MissingEdge);  // 3-1 absent
  CHECK_THROWS_AS(vertex_split(g, 1, 0, 3), MissingEdge);  // 1-3 absent
}

TEST_CASE("split invariants on sampled valid triples") {
  int checked = 0;
  for (int seed = 1; seed <= 15; ++seed) {
    int n = 4 + seed % 4;
    int maxm = n * (n - 1) / 2;
    Graph g = random_connected(n, (n - 1) + seed % (maxm - n + 2), seed * 17);
    for (auto [v, w, x] : valid_split_triples(g)) {
      auto split = vertex_split(g, v, w, x);
      CHECK(split.graph.edge_count() - split.graph.vertex_count() ==
            g.edge_count() - g.vertex_count() - 1);
      CHECK(component_count(split.graph) == component_count(g));
      ++checked;
      if (checked > 200) return;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("generators") {
  CHECK(cycle(3).edge_count() == 3);
  CHECK(path(2).edge_count() == 1);
  CHECK(complete(4).edge_count() == 6);
  CHECK(star(4).degree(0) == 3);
  CHECK_THROWS_AS(cycle(2), InvalidParameter);
  CHECK_THROWS_AS(random_connected(5, 3, 1), InvalidParameter);
  CHECK_THROWS_AS(random_connected(5, 11, 1), InvalidParameter);

  Graph a = random_connected(6, 8, 1);
  Graph b = random_connected(6, 8, 1);
  CHECK(a == b);  // determinism
  CHECK(is_connected(a));
  CHECK(a.edge_count() == 8);
  Graph c = random_connected(6, 8, 2);
  CHECK(!(a == c));
}

TEST_CASE("disjoint union offsets vertices") {
  Graph u = disjoint_union({path(2), cycle(3)});
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(u.has_edge(0, 1));
  CHECK(u.has_edge(2, 3));
  CHECK(u.has_edge(4, 2));
  CHECK(component_count(u) == 2);
}

TEST_CASE("trail validation") {
  Graph g = path(3);
  Trail ok{{0, 1, 2}, {0, 1}};
  ok.validate(g);
  Trail bad_incidence{{0, 2, 1}, {0, 1}};
  CHECK_THROWS_AS(bad_incidence.validate(g), InvalidParameter);
  Trail repeated{{0, 1, 0}, {0, 0}};
  CHECK_THROWS_AS(repeated.validate(g), InvalidParameter);
  Trail empty;
  CHECK_THROWS_AS(empty.validate(g), InvalidParameter);
}

TEST_CASE("small-graph enumerator matches known counts") {
  CHECK(testsupport::all_connected_graphs(4).size() == 6);
  CHECK(testsupport::all_connected_graphs(5).size() == 21);
}
