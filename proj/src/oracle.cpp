#include "submatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

#include "submatch/constructive.hpp"
#include "submatch/errors.hpp"
#include "submatch/formats.hpp"

namespace submatch {

namespace {

Signing signing_from_counter(int m, std::uint32_t counter) {
  Signing s;
  s.values.reserve(m);
  for (int e = 0; e < m; ++e)
    s.values.push_back((counter >> e) & 1u ? 1 : -1);
  return s;
}

}  // namespace

BetaTable beta_table(const Graph& g, int cap) {
  int m = g.edge_count();
  int n = g.vertex_count();
  if (m > cap) throw TooLarge("edge count " + std::to_string(m) + " exceeds brute-force cap " + std::to_string(cap));
  if (m > 30) throw TooLarge("signing enumeration is limited to 30 edges");

  std::vector<std::uint32_t> vertex_mask(n, 0);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    vertex_mask[u] |= 1u << e;
    vertex_mask[v] |= 1u << e;
  }

  // best total and first counter attaining it, per exact submatch count
  std::vector<int> best(n + 1, INT_MIN);
  std::vector<std::uint32_t> best_counter(n + 1, 0);
  const std::uint64_t limit = 1ull << m;
  for (std::uint64_t counter = 0; counter < limit; ++counter) {
    auto c32 = static_cast<std::uint32_t>(counter);
    int count = 0;
    for (int v = 0; v < n; ++v) {
      int sum = 2 * std::popcount(c32 & vertex_mask[v]) - g.degree(v);
      if (sum <= 1) ++count;
    }
    int tot = 2 * std::popcount(c32) - m;
    if (tot > best[count]) {
      best[count] = tot;
      best_counter[count] = c32;
    }
  }

  BetaTable table;
  table.graph_id = serialize_edge_list(g);
  table.n = n;
  table.m = m;
  table.omega = component_count(g);
  table.odd_count = static_cast<int>(odd_vertices(g).size());
  table.beta.assign(n + 1, INT_MIN);
  table.witness.assign(n + 1, Signing{});
  for (int k = n; k >= 0; --k) {
    int value = best[k];
    if (k < n && table.beta[k + 1] > value) value = table.beta[k + 1];
    table.beta[k] = value;
    // first counter over all buckets c >= k attaining the suffix max
    std::uint32_t counter = UINT32_MAX;
    for (int c = k; c <= n; ++c)
      if (best[c] == value) counter = std::min(counter, best_counter[c]);
    table.witness[k] = signing_from_counter(m, counter);
  }
  return table;
}

namespace {

// Backtracking enumeration. At each level the trail containing the lowest
// uncovered edge is enumerated exactly once up to reversal by growing two
// edge-disjoint arms from that edge's endpoints; recursion continues on the
// edges left over. Trail endpoints must be distinct unused odd vertices,
// which every complete partition satisfies.
struct PartitionEnumerator {
  const Graph& g;
  const std::function<void(const CompletePartition&)>& visit;
  int k;
  std::vector<char> is_odd;
  std::vector<char> used_edge;
  std::vector<char> used_endpoint;
  std::vector<Trail> trails;

  PartitionEnumerator(const Graph& g_, const std::function<void(const CompletePartition&)>& visit_)
      : g(g_), visit(visit_) {
    auto odd = odd_vertices(g);
    k = static_cast<int>(odd.size()) / 2;
    is_odd.assign(g.vertex_count(), 0);
    for (int v : odd) is_odd[v] = 1;
    used_edge.assign(g.edge_count(), 0);
    used_endpoint.assign(g.vertex_count(), 0);
  }

  void run() { recurse(0); }

  void recurse(int covered) {
    if (covered == g.edge_count()) {
      if (static_cast<int>(trails.size()) == k) {
        CompletePartition p{trails};
        p.canonicalize(g);
        visit(p);
      }
      return;
    }
    if (static_cast<int>(trails.size()) >= k) return;
    int seed_edge = 0;
    while (used_edge[seed_edge]) ++seed_edge;
    auto [u, v] = g.edge(seed_edge);
    used_edge[seed_edge] = 1;
    std::vector<int> left, right;
    grow_left(seed_edge, u, v, left, right, covered);
    used_edge[seed_edge] = 0;
  }

  // Arm extension: `left` grows backwards from u, `right` forwards from v.
  void grow_left(int seed_edge, int u, int v, std::vector<int>& left, std::vector<int>& right,
                 int covered) {
    grow_right(seed_edge, u, v, left, right, covered);
    int at = arm_far(u, left);
    for (int e : g.incident(at)) {
      if (used_edge[e]) continue;
      used_edge[e] = 1;
      left.push_back(e);
      grow_left(seed_edge, u, v, left, right, covered);
      left.pop_back();
      used_edge[e] = 0;
    }
  }

  void grow_right(int seed_edge, int u, int v, std::vector<int>& left, std::vector<int>& right,
                  int covered) {
    consider(seed_edge, u, v, left, right, covered);
    int at = arm_far(v, right);
    for (int e : g.incident(at)) {
      if (used_edge[e]) continue;
      used_edge[e] = 1;
      right.push_back(e);
      grow_right(seed_edge, u, v, left, right, covered);
      right.pop_back();
      used_edge[e] = 0;
    }
  }

  int arm_far(int origin, const std::vector<int>& arm) const {
    int at = origin;
    for (int e : arm) at = g.other_end(e, at);
    return at;
  }

  void consider(int seed_edge, int u, int v, const std::vector<int>& left,
                const std::vector<int>& right, int covered) {
    int a = arm_far(u, left);
    int b = arm_far(v, right);
    if (a == b) return;
    if (!is_odd[a] || !is_odd[b]) return;
    if (used_endpoint[a] || used_endpoint[b]) return;
    std::vector<int> edge_seq(left.rbegin(), left.rend());
    edge_seq.push_back(seed_edge);
    edge_seq.insert(edge_seq.end(), right.begin(), right.end());
    trails.push_back(trail_from_edges(g, a, edge_seq));
    used_endpoint[a] = used_endpoint[b] = 1;
    recurse(covered + static_cast<int>(edge_seq.size()));
    used_endpoint[a] = used_endpoint[b] = 0;
    trails.pop_back();
  }
};

}  // namespace

void enumerate_complete_partitions(const Graph& g,
                                   const std::function<void(const CompletePartition&)>& visit,
                                   int cap) {
  if (!is_connected(g)) throw NotApplicable("graph is disconnected");
  if (is_eulerian(g) || g.edge_count() == 0) throw NotApplicable("graph is Eulerian");
  if (g.edge_count() > cap)
    throw TooLarge("edge count " + std::to_string(g.edge_count()) + " exceeds partition cap " + std::to_string(cap));
  PartitionEnumerator en(g, visit);
  en.run();
}

std::vector<CompletePartition> all_complete_partitions(const Graph& g, int cap) {
  std::vector<CompletePartition> out;
  enumerate_complete_partitions(g, [&](const CompletePartition& p) { out.push_back(p); }, cap);
  return out;
}

int tau(const CompletePartition& p) {
  int count = 0;
  for (const auto& t : p.trails)
    if (t.length() % 2 == 1) ++count;
  return count;
}

std::pair<int, CompletePartition> eta_exact(const Graph& g, int cap) {
  int best = -1;
  CompletePartition argmax;
  std::vector<std::vector<int>> best_key;
  enumerate_complete_partitions(
      g,
      [&](const CompletePartition& p) {
        int t = tau(p);
        if (t < best) return;
        auto key = p.canonical_key();
        if (t > best || key < best_key) {
          best = t;
          argmax = p;
          best_key = std::move(key);
        }
      },
      cap);
  return {best, argmax};
}

bool BoundCheck::all_hold() const {
  return std::all_of(holds.begin(), holds.end(), [](char c) { return c != 0; });
}

BoundCheck verify_connected_bound(const Graph& g, const BetaTable& table) {
  if (!is_connected(g)) throw NotConnected("connected bound requires a connected graph");
  BoundCheck check;
  for (int k = 1; k <= table.n; ++k)
    check.holds.push_back(table.beta[k] >= table.n - k - 1 ? 1 : 0);
  return check;
}

BoundCheck verify_conjecture_bound(const Graph& g, const BetaTable& table) {
  if (g.vertex_count() > 0 && g.min_degree() == 0)
    throw IsolatedVertex("bound requires minimum degree >= 1");
  BoundCheck check;
  for (int k = 1; k <= table.n; ++k)
    check.holds.push_back(table.beta[k] >= table.n - k - table.omega ? 1 : 0);
  return check;
}

SplitVerdict verify_split_claim(const Graph& g, int v, int w, int x, int k, int cap) {
  auto split = vertex_split(g, v, w, x);
  if (k < 1 || k + 1 > split.graph.vertex_count()) throw InvalidK("k+1 must lie in 1..n(G')");
  auto tg = beta_table(g, cap);
  auto ts = beta_table(split.graph, cap);
  SplitVerdict verdict;
  verdict.k = k;
  verdict.beta_g = tg.beta[k];
  verdict.beta_split = ts.beta[k + 1];
  verdict.beta_inequality = verdict.beta_g >= verdict.beta_split;
  Signing lifted = lift_signing(ts.witness[k + 1], split);
  verdict.lift_is_submatching = is_k_submatching(g, lifted, k);
  verdict.lift_total_equal = total(lifted) == verdict.beta_split;
  return verdict;
}

std::vector<SplitVerdict> verify_split_claim_all(const Graph& g, int v, int w, int x, int cap) {
  auto split = vertex_split(g, v, w, x);
  auto tg = beta_table(g, cap);
  auto ts = beta_table(split.graph, cap);
  std::vector<SplitVerdict> verdicts;
  for (int k = 1; k <= g.vertex_count(); ++k) {
    SplitVerdict verdict;
    verdict.k = k;
    verdict.beta_g = tg.beta[k];
    verdict.beta_split = ts.beta[k + 1];
    verdict.beta_inequality = verdict.beta_g >= verdict.beta_split;
    Signing lifted = lift_signing(ts.witness[k + 1], split);
    verdict.lift_is_submatching = is_k_submatching(g, lifted, k);
    verdict.lift_total_equal = total(lifted) == verdict.beta_split;
    verdicts.push_back(verdict);
  }
  return verdicts;
}

ComponentAllocation beta_component_sum(const Graph& g, int k, int cap) {
  if (g.vertex_count() > 0 && g.min_degree() == 0)
    throw IsolatedVertex("component decomposition requires minimum degree >= 1");
  if (k < 1 || k > g.vertex_count()) throw InvalidK("k must lie in 1..n");

  auto views = component_views(g);
  std::vector<BetaTable> tables;
  tables.reserve(views.size());
  for (const auto& view : views) tables.push_back(beta_table(view.graph, cap));

  const int parts = static_cast<int>(views.size());
  // dp[j] = best value using the components seen so far with j constrained
  // vertices; choice[i][j] = k_i realizing it.
  std::vector<int> dp(k + 1, INT_MIN);
  dp[0] = 0;
  std::vector<std::vector<int>> choice(parts, std::vector<int>(k + 1, -1));
  for (int i = 0; i < parts; ++i) {
    int ni = views[i].graph.vertex_count();
    std::vector<int> next(k + 1, INT_MIN);
    for (int j = 0; j <= k; ++j) {
      if (dp[j] == INT_MIN) continue;
      for (int ki = 0; ki <= ni && j + ki <= k; ++ki) {
        int value = dp[j] + tables[i].beta[ki];
        if (value > next[j + ki]) {
          next[j + ki] = value;
          choice[i][j + ki] = ki;
        }
      }
    }
    dp = std::move(next);
  }
  if (dp[k] == INT_MIN) throw InvalidK("k exceeds the number of vertices");

  ComponentAllocation result;
  result.value = dp[k];
  result.allocation.assign(parts, 0);
  int j = k;
  for (int i = parts - 1; i >= 0; --i) {
    result.allocation[i] = choice[i][j];
    j -= choice[i][j];
  }
  return result;
}

}  // namespace submatch
