#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "submatch/graph.hpp"

namespace submatch {

// Assignment of +1/-1 to every edge index of a fixed graph. Value object:
// all mutating-style operations return new signings.
struct Signing {
  std::vector<std::int8_t> values;

  int operator[](int e) const { return values[e]; }
  bool operator==(const Signing& o) const { return values == o.values; }
};

Signing all_minus_signing(const Graph& g);
Signing all_plus_signing(const Graph& g);

// '+'/'-' characters in edge-index order.
std::string signing_to_string(const Signing& s);
Signing signing_from_string(const Graph& g, const std::string& text);

int vertex_sum(const Graph& g, const Signing& s, int v);
std::vector<int> vertex_sums(const Graph& g, const Signing& s);
int total(const Signing& s);
// Number of vertices v with vertex_sum(v) <= 1.
int submatch_count(const Graph& g, const Signing& s);
// Throws InvalidK unless 1 <= k <= n.
bool is_k_submatching(const Graph& g, const Signing& s, int k);
// The k = n case: the constraint holds at every vertex.
bool is_n_submatching(const Graph& g, const Signing& s);
// Odd-degree vertices with vertex sum < 1.
std::vector<int> o_f(const Graph& g, const Signing& s);

// A trail is good if consecutive edge values alternate.
bool is_good_trail(const Signing& s, const Trail& t);
// (value of first edge, value of last edge).
std::pair<int, int> endpoint_signs(const Signing& s, const Trail& t);

// Negates the values on exactly the trail's edges.
Signing switch_trail(const Signing& s, const Trail& t);
Signing switch_edge_set(const Signing& s, const std::vector<int>& edges);

enum class TrailSearchMode { Longest, Greedy };

// Internal search knobs shared by the public entry point and the improver.
// Exactly one of first_sign / first_edge must be set. A result is always
// maximal: not extendable at its end by an unused allowed edge of opposite
// value. end_sign / require_open filter which maximal trails qualify; in
// Greedy mode the single greedily built trail is checked against them.
struct GoodTrailQuery {
  int start = 0;
  std::optional<int> first_sign;
  std::optional<int> first_edge;
  std::optional<int> end_sign;
  std::optional<bool> require_open;
  std::vector<char> forbidden;  // per edge index; empty means none
  TrailSearchMode mode = TrailSearchMode::Longest;
};

std::optional<Trail> find_good_trail(const Graph& g, const Signing& s, const GoodTrailQuery& q);

// Maximal good trail from `start` whose first edge has value `first_sign`,
// avoiding `forbidden_edges`. Longest mode backtracks over all good
// extensions and returns the longest such trail (lowest-edge-index order
// breaks ties); greedy mode extends with the lowest-index usable edge until
// stuck. Returns nullopt when no allowed incident edge has the first value.
std::optional<Trail> find_maximal_good_trail(const Graph& g, const Signing& s, int start,
                                             int first_sign,
                                             const std::vector<int>& forbidden_edges = {},
                                             TrailSearchMode mode = TrailSearchMode::Longest);

// Random signing with every vertex sum <= 1, reproducible per rng state.
// Tries uniform rejection sampling first, then falls back to greedily
// flipping edges of an all-minus signing in random order.
Signing random_n_submatching(const Graph& g, std::mt19937_64& rng);

}  // namespace submatch
