#include "submatch/signing.hpp"

#include <algorithm>

#include "submatch/errors.hpp"

namespace submatch {

namespace {

void require_match(const Graph& g, const Signing& s) {
  if (static_cast<int>(s.values.size()) != g.edge_count())
    throw InvalidParameter("signing length does not match edge count");
}

}  // namespace

Signing all_minus_signing(const Graph& g) {
  return Signing{std::vector<std::int8_t>(g.edge_count(), -1)};
}

Signing all_plus_signing(const Graph& g) {
  return Signing{std::vector<std::int8_t>(g.edge_count(), 1)};
}

std::string signing_to_string(const Signing& s) {
  std::string out;
  out.reserve(s.values.size());
  for (auto v : s.values) out.push_back(v > 0 ? '+' : '-');
  return out;
}

Signing signing_from_string(const Graph& g, const std::string& text) {
  if (static_cast<int>(text.size()) != g.edge_count())
    throw InvalidParameter("signing string length does not match edge count");
  Signing s;
  s.values.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      s.values.push_back(1);
    else if (c == '-')
      s.values.push_back(-1);
    else
      throw InvalidParameter("signing string must contain only '+' and '-'");
  }
  return s;
}

int vertex_sum(const Graph& g, const Signing& s, int v) {
  int sum = 0;
  for (int e : g.incident(v)) sum += s.values[e];
  return sum;
}

std::vector<int> vertex_sums(const Graph& g, const Signing& s) {
  std::vector<int> sums(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    sums[u] += s.values[e];
    sums[v] += s.values[e];
  }
  return sums;
}

int total(const Signing& s) {
  int t = 0;
  for (auto v : s.values) t += v;
  return t;
}

int submatch_count(const Graph& g, const Signing& s) {
  require_match(g, s);
  int count = 0;
  for (int sum : vertex_sums(g, s))
    if (sum <= 1) ++count;
  return count;
}

bool is_k_submatching(const Graph& g, const Signing& s, int k) {
  if (k < 1 || k > g.vertex_count()) throw InvalidK("k must lie in 1..n");
  return submatch_count(g, s) >= k;
}

bool is_n_submatching(const Graph& g, const Signing& s) {
  return submatch_count(g, s) == g.vertex_count();
}

std::vector<int> o_f(const Graph& g, const Signing& s) {
  require_match(g, s);
  auto sums = vertex_sums(g, s);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 1 && sums[v] < 1) out.push_back(v);
  return out;
}

bool is_good_trail(const Signing& s, const Trail& t) {
  for (std::size_t i = 0; i + 1 < t.edges.size(); ++i)
    if (s.values[t.edges[i]] != -s.values[t.edges[i + 1]]) return false;
  return true;
}

std::pair<int, int> endpoint_signs(const Signing& s, const Trail& t) {
  return {s.values[t.edges.front()], s.values[t.edges.back()]};
}

Signing switch_trail(const Signing& s, const Trail& t) { return switch_edge_set(s, t.edges); }

Signing switch_edge_set(const Signing& s, const std::vector<int>& edges) {
  Signing out = s;
  for (int e : edges) out.values[e] = static_cast<std::int8_t>(-out.values[e]);
  return out;
}

namespace {

struct TrailSearch {
  const Graph& g;
  const Signing& s;
  const GoodTrailQuery& q;
  std::vector<char> used;
  std::vector<int> path;  // edge indices
  int start_vertex;
  std::vector<int> best;
  int best_end = -1;
  bool found = false;

  TrailSearch(const Graph& g_, const Signing& s_, const GoodTrailQuery& q_)
      : g(g_), s(s_), q(q_), used(g_.edge_count(), 0), start_vertex(q_.start) {
    if (!q.forbidden.empty()) used = q.forbidden;
  }

  bool allowed(int e) const { return !used[e]; }

  bool accepts(int end_vertex, int last_value) const {
    if (q.end_sign && *q.end_sign != last_value) return false;
    if (q.require_open) {
      bool open = end_vertex != start_vertex;
      if (*q.require_open != open) return false;
    }
    return true;
  }

  void consider(int end_vertex, int last_value) {
    if (!accepts(end_vertex, last_value)) return;
    if (!found || path.size() > best.size()) {
      best = path;
      best_end = end_vertex;
      found = true;
    }
  }

  void dfs(int at, int last_value) {
    bool extendable = false;
    for (int e : g.incident(at)) {
      if (!allowed(e) || s.values[e] != -last_value) continue;
      extendable = true;
      used[e] = 1;
      path.push_back(e);
      dfs(g.other_end(e, at), -last_value);
      path.pop_back();
      used[e] = 0;
    }
    if (!extendable) consider(at, last_value);
  }

  void greedy_from(int first_edge) {
    used[first_edge] = 1;
    path.push_back(first_edge);
    int at = g.other_end(first_edge, q.start);
    int last = s.values[first_edge];
    for (;;) {
      int next = -1;
      for (int e : g.incident(at)) {
        if (allowed(e) && s.values[e] == -last) {
          next = e;
          break;
        }
      }
      if (next < 0) break;
      used[next] = 1;
      path.push_back(next);
      at = g.other_end(next, at);
      last = -last;
    }
    consider(at, last);
  }
};

}  // namespace

std::optional<Trail> find_good_trail(const Graph& g, const Signing& s, const GoodTrailQuery& q) {
  require_match(g, s);
  if (q.start < 0 || q.start >= g.vertex_count()) throw InvalidParameter("start vertex out of range");
  if (q.first_sign.has_value() == q.first_edge.has_value())
    throw InvalidParameter("exactly one of first_sign/first_edge must be set");
  if (!q.forbidden.empty() && static_cast<int>(q.forbidden.size()) != g.edge_count())
    throw InvalidParameter("forbidden mask length mismatch");

  std::vector<int> first_candidates;
  for (int e : g.incident(q.start)) {
    if (!q.forbidden.empty() && q.forbidden[e]) continue;
    if (q.first_edge) {
      if (e == *q.first_edge) first_candidates.push_back(e);
    } else if (s.values[e] == *q.first_sign) {
      first_candidates.push_back(e);
    }
  }
  if (first_candidates.empty()) return std::nullopt;

  TrailSearch search(g, s, q);
  if (q.mode == TrailSearchMode::Greedy) {
    search.greedy_from(first_candidates.front());
  } else {
    for (int e : first_candidates) {
      search.used[e] = 1;
      search.path.push_back(e);
      search.dfs(g.other_end(e, q.start), s.values[e]);
      search.path.pop_back();
      search.used[e] = 0;
    }
  }
  if (!search.found) return std::nullopt;
  return trail_from_edges(g, q.start, search.best);
}

std::optional<Trail> find_maximal_good_trail(const Graph& g, const Signing& s, int start,
                                             int first_sign, const std::vector<int>& forbidden_edges,
                                             TrailSearchMode mode) {
  GoodTrailQuery q;
  q.start = start;
  q.first_sign = first_sign;
  q.mode = mode;
  if (!forbidden_edges.empty()) {
    q.forbidden.assign(g.edge_count(), 0);
    for (int e : forbidden_edges) q.forbidden[e] = 1;
  }
  return find_good_trail(g, s, q);
}

Signing random_n_submatching(const Graph& g, std::mt19937_64& rng) {
  int m = g.edge_count();
  for (int attempt = 0; attempt < 50; ++attempt) {
    Signing s;
    s.values.reserve(m);
    for (int e = 0; e < m; ++e) s.values.push_back(rng() & 1 ? 1 : -1);
    if (is_n_submatching(g, s)) return s;
  }
  // Dense graphs rarely pass rejection sampling; build a valid signing by
  // flipping edges of the all-minus signing while the constraint allows.
  Signing s = all_minus_signing(g);
  auto sums = vertex_sums(g, s);
  std::vector<int> order(m);
  for (int e = 0; e < m; ++e) order[e] = e;
  detail::shuffle(order, rng);
  for (int e : order) {
    auto [u, v] = g.edge(e);
    if (sums[u] + 2 <= 1 && sums[v] + 2 <= 1) {
      s.values[e] = 1;
      sums[u] += 2;
      sums[v] += 2;
    }
  }
  return s;
}

}  // namespace submatch
