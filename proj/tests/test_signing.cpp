#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "submatch/errors.hpp"
#include "submatch/signing.hpp"
#include "test_support.hpp"

using namespace submatch;

namespace {

Signing random_signing(const Graph& g, std::mt19937_64& rng) {
  Signing s;
  for (int e = 0; e < g.edge_count(); ++e) s.values.push_back(rng() & 1 ? 1 : -1);
  return s;
}

}  // namespace

TEST_CASE("vertex sums") {
  Graph k13 = star(4);
  Signing all_plus = all_plus_signing(k13);
  CHECK(vertex_sum(k13, all_plus, 0) == 3);
  CHECK(vertex_sum(k13, all_plus, 1) == 1);

  Graph p3 = path(3);
  Signing s = signing_from_string(p3, "+-");
  CHECK(vertex_sum(p3, s, 1) == 0);

  // parity: sum(v) == degree(v) mod 2, |sum| <= degree
  std::mt19937_64 rng(42);
  for (int seed = 1; seed <= 15; ++seed) {
    Graph g = random_connected(6, 7 + seed % 8, seed);
    Signing r = random_signing(g, rng);
    auto sums = vertex_sums(g, r);
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(((sums[v] - g.degree(v)) % 2 + 2) % 2 == 0);
      CHECK(std::abs(sums[v]) <= g.degree(v));
      CHECK(sums[v] == vertex_sum(g, r, v));
    }
  }
}

TEST_CASE("total and submatch count") {
  Graph c3 = cycle(3);
  Signing plus = all_plus_signing(c3);
  CHECK(total(plus) == 3);
  CHECK(submatch_count(c3, plus) == 0);

  Graph c4 = cycle(4);
  Signing alt = signing_from_string(c4, "+-+-");
  CHECK(total(alt) == 0);
  CHECK(submatch_count(c4, alt) == 4);

  Graph k2 = path(2);
  CHECK(total(all_plus_signing(k2)) == 1);
  CHECK(submatch_count(k2, all_plus_signing(k2)) == 2);

  // handshake identity: 2 * total == sum of vertex sums
  std::mt19937_64 rng(7);
  for (int seed = 1; seed <= 15; ++seed) {
    int n = 5 + seed % 3;
    int m = std::clamp(5 + seed % 7, n - 1, n * (n - 1) / 2);
    Graph g = random_connected(n, m, seed);
    Signing r = random_signing(g, rng);
    int sum = 0;
    for (int v : vertex_sums(g, r)) sum += v;
    CHECK(2 * total(r) == sum);
  }
}

TEST_CASE("k-submatching predicate") {
  Graph c3 = cycle(3);
  CHECK(!is_k_submatching(c3, all_plus_signing(c3), 1));
  CHECK_THROWS_AS(is_k_submatching(c3, all_plus_signing(c3), 0), InvalidK);
  CHECK_THROWS_AS(is_k_submatching(c3, all_plus_signing(c3), 4), InvalidK);

  Graph p3 = path(3);
  CHECK(is_k_submatching(p3, signing_from_string(p3, "++"), 1));  // endpoints have sum 1

  Graph c4 = cycle(4);
  CHECK(is_k_submatching(c4, signing_from_string(c4, "+-+-"), 4));
}

TEST_CASE("o_f") {
  Graph k2 = path(2);
  CHECK(o_f(k2, all_plus_signing(k2)).empty());
  CHECK(o_f(k2, all_minus_signing(k2)) == std::vector<int>{0, 1});

  Graph k13 = star(4);
  Signing s = signing_from_string(k13, "++-");
  CHECK(o_f(k13, s) == std::vector<int>{3});  // the minus leaf; center sum is 1

  // only odd-degree vertices qualify
  Graph c4 = cycle(4);
  CHECK(o_f(c4, all_minus_signing(c4)).empty());
}

TEST_CASE("good trails and endpoint signs") {
  Graph p4 = path(4);
  Trail whole{{0, 1, 2, 3}, {0, 1, 2}};
  CHECK(is_good_trail(signing_from_string(p4, "+-+"), whole));
  CHECK(endpoint_signs(signing_from_string(p4, "+-+"), whole) == std::pair<int, int>{1, 1});
  CHECK(!is_good_trail(signing_from_string(p4, "++-"), whole));

  Trail single{{1, 2}, {1}};
  CHECK(is_good_trail(signing_from_string(p4, "++-"), single));
  CHECK(endpoint_signs(signing_from_string(p4, "++-"), single) == std::pair<int, int>{1, 1});
}

TEST_CASE("switch trail") {
  Graph p3 = path(3);
  Signing s = signing_from_string(p3, "-+");
  Trail whole{{0, 1, 2}, {0, 1}};
  Signing switched = switch_trail(s, whole);
  CHECK(signing_to_string(switched) == "+-");
  CHECK(vertex_sum(p3, switched, 0) == 1);
  CHECK(vertex_sum(p3, switched, 1) == 0);
  CHECK(vertex_sum(p3, switched, 2) == -1);
  CHECK(switch_trail(switched, whole) == s);  // involution

  // good (-1,-1) open trail: both endpoint sums rise by 2, interior fixed
  Graph p4 = path(4);
  Signing t = signing_from_string(p4, "-+-");
  Trail inner{{0, 1, 2, 3}, {0, 1, 2}};
  Signing u = switch_trail(t, inner);
  CHECK(vertex_sum(p4, u, 0) == vertex_sum(p4, t, 0) + 2);
  CHECK(vertex_sum(p4, u, 3) == vertex_sum(p4, t, 3) + 2);
  CHECK(vertex_sum(p4, u, 1) == vertex_sum(p4, t, 1));
  CHECK(vertex_sum(p4, u, 2) == vertex_sum(p4, t, 2));

  // total change is -2 * (previous sum on the trail)
  std::mt19937_64 rng(11);
  for (int seed = 1; seed <= 15; ++seed) {
    Graph g = random_connected(6, 8, seed * 3);
    Signing r = random_signing(g, rng);
    auto tr = find_maximal_good_trail(g, r, 0, r.values[g.incident(0)[0]]);
    REQUIRE(tr.has_value());
    int before = 0;
    for (int e : tr->edges) before += r.values[e];
    CHECK(total(switch_trail(r, *tr)) - total(r) == -2 * before);
  }
}

TEST_CASE("maximal good trail search") {
  Graph k13 = star(4);
  CHECK(!find_maximal_good_trail(k13, all_plus_signing(k13), 0, -1).has_value());

  Graph p4 = path(4);
  Signing s = signing_from_string(p4, "-+-");
  auto t = find_maximal_good_trail(p4, s, 0, -1);
  REQUIRE(t.has_value());
  CHECK(t->edges == std::vector<int>{0, 1, 2});
  CHECK(endpoint_signs(s, *t) == std::pair<int, int>{-1, -1});

  Graph c4 = cycle(4);
  Signing alt = signing_from_string(c4, "-+-+");
  for (int v = 0; v < 4; ++v) {
    auto w = find_maximal_good_trail(c4, alt, v, -1);
    REQUIRE(w.has_value());
    CHECK(w->length() == 4);
    CHECK(w->closed());
  }

  // longest >= greedy on identical inputs
  std::mt19937_64 rng(5);
  for (int seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected(6, 7 + seed % 8, seed * 13);
    Signing r = random_signing(g, rng);
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int sign : {-1, 1}) {
        auto longest = find_maximal_good_trail(g, r, v, sign, {}, TrailSearchMode::Longest);
        auto greedy = find_maximal_good_trail(g, r, v, sign, {}, TrailSearchMode::Greedy);
        CHECK(longest.has_value() == greedy.has_value());
        if (longest) {
          CHECK(longest->length() >= greedy->length());
          CHECK(is_good_trail(r, *longest));
          CHECK(is_good_trail(r, *greedy));
          longest->validate(g);
        }
      }
    }
  }
}

TEST_CASE("forbidden edges are honored") {
  Graph p4 = path(4);
  Signing s = signing_from_string(p4, "-+-");
  auto t = find_maximal_good_trail(p4, s, 0, -1, {1});
  REQUIRE(t.has_value());
  CHECK(t->edges == std::vector<int>{0});
  auto none = find_maximal_good_trail(p4, s, 0, -1, {0});
  CHECK(!none.has_value());
}

TEST_CASE("signing string round trip") {
  Graph g = testsupport::paw();
  Signing s = signing_from_string(g, "+--+");
  CHECK(signing_to_string(s) == "+--+");
  CHECK_THROWS_AS(signing_from_string(g, "++"), InvalidParameter);
  CHECK_THROWS_AS(signing_from_string(g, "+0-+"), InvalidParameter);
}

TEST_CASE("random valid signings satisfy the constraint everywhere") {
  std::mt19937_64 rng(99);
  for (int seed = 1; seed <= 10; ++seed) {
    Graph g = random_connected(5 + seed % 4, 6 + seed % 8, seed * 7);
    for (int r = 0; r < 5; ++r) CHECK(is_n_submatching(g, random_n_submatching(g, rng)));
  }
}
