#include "submatch/constructive.hpp"

#include <algorithm>
#include <set>

#include "submatch/errors.hpp"

namespace submatch {

namespace {

void require_partitionable(const Graph& g) {
  if (!is_connected(g)) throw NotApplicable("graph is disconnected");
  if (is_eulerian(g) || g.edge_count() == 0) throw NotApplicable("graph is Eulerian");
}

}  // namespace

CompletePartition pairing_partition(const Graph& g,
                                    const std::vector<std::pair<int, int>>& pairing,
                                    int rotation) {
  require_partitionable(g);
  auto odd = odd_vertices(g);
  std::set<int> expected(odd.begin(), odd.end());
  std::set<int> seen;
  for (auto [a, b] : pairing) {
    if (a == b) throw BadPairing("pair joins a vertex to itself");
    for (int v : {a, b}) {
      if (!expected.count(v)) throw BadPairing("vertex " + std::to_string(v) + " is not odd");
      if (!seen.insert(v).second) throw BadPairing("vertex " + std::to_string(v) + " paired twice");
    }
  }
  if (seen.size() != expected.size()) throw BadPairing("pairing does not cover all odd vertices");

  int m = g.edge_count();
  auto extended = g.edges();
  for (auto pr : pairing) extended.push_back(pr);  // virtual edges at positions m..m+k-1
  auto circuit = detail::euler_circuit_positions(g.vertex_count(), extended, rotation);
  const int total_edges = static_cast<int>(circuit.size());

  // Vertex walk of the closed circuit: edge circuit[i] goes from walk[i] to
  // walk[i+1], and walk[total] == walk[0].
  int start = 0;
  std::vector<int> ext_degree(g.vertex_count(), 0);
  for (auto [a, b] : extended) ++ext_degree[a], ++ext_degree[b];
  while (ext_degree[start] == 0) ++start;
  std::vector<int> walk(total_edges + 1);
  walk[0] = start;
  for (int i = 0; i < total_edges; ++i) {
    auto [a, b] = extended[circuit[i]];
    walk[i + 1] = a == walk[i] ? b : a;
  }

  // Cut the circular sequence at the virtual edges. Virtual edges are
  // vertex-disjoint, so no two are adjacent and every arc between cuts is a
  // nonempty open trail.
  std::vector<int> cuts;
  for (int i = 0; i < total_edges; ++i)
    if (circuit[i] >= m) cuts.push_back(i);

  CompletePartition partition;
  const int k = static_cast<int>(cuts.size());
  for (int c = 0; c < k; ++c) {
    int from = cuts[c] + 1;
    int upto = cuts[(c + 1) % k];  // exclusive; may wrap
    std::vector<int> arc;
    for (int j = from; j % total_edges != upto % total_edges; ++j)
      arc.push_back(circuit[j % total_edges]);
    partition.trails.push_back(trail_from_edges(g, walk[from % total_edges], arc));
  }

  partition.canonicalize(g);
  partition.validate(g);
  return partition;
}

namespace {

void enumerate_pairings(std::vector<int> free_vertices, std::vector<std::pair<int, int>>& current,
                        long long& budget,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  if (budget <= 0) return;
  if (free_vertices.empty()) {
    --budget;
    visit(current);
    return;
  }
  int a = free_vertices.front();
  for (std::size_t i = 1; i < free_vertices.size(); ++i) {
    int b = free_vertices[i];
    std::vector<int> rest;
    for (std::size_t j = 1; j < free_vertices.size(); ++j)
      if (j != i) rest.push_back(free_vertices[j]);
    current.push_back({a, b});
    enumerate_pairings(std::move(rest), current, budget, visit);
    current.pop_back();
    if (budget <= 0) return;
  }
}

}  // namespace

std::pair<int, CompletePartition> eta_search(const Graph& g, const EtaSearchOptions& opt) {
  require_partitionable(g);
  auto odd = odd_vertices(g);

  int best = -1;
  CompletePartition argmax;
  std::vector<std::vector<int>> best_key;
  auto consider = [&](const CompletePartition& p) {
    int t = tau(p);
    if (t < best) return;
    auto key = p.canonical_key();
    if (t > best || key < best_key) {
      best = t;
      argmax = p;
      best_key = std::move(key);
    }
  };

  long long budget = opt.max_pairings;
  std::vector<std::pair<int, int>> current;
  enumerate_pairings(odd, current, budget, [&](const std::vector<std::pair<int, int>>& pairing) {
    for (int rot = 0; rot < std::max(1, opt.circuit_variants); ++rot)
      consider(pairing_partition(g, pairing, rot));
  });
  return {best, argmax};
}

Signing signing_from_partition(const Graph& g, const CompletePartition& p) {
  p.validate(g);
  Signing s;
  s.values.assign(g.edge_count(), 0);
  for (const auto& t : p.trails) {
    int value = t.length() % 2 == 1 ? 1 : -1;
    for (int e : t.edges) {
      s.values[e] = static_cast<std::int8_t>(value);
      value = -value;
    }
  }
  return s;
}

Signing eulerian_signing(const Graph& g) {
  if (!is_eulerian(g)) throw NotEulerian("graph is not connected Eulerian");
  Trail circuit = euler_circuit(g);
  Signing s;
  s.values.assign(g.edge_count(), 0);
  int value = -1;
  for (int e : circuit.edges) {
    s.values[e] = static_cast<std::int8_t>(value);
    value = -value;
  }
  return s;
}

BetaNResult beta_n_formula(const Graph& g, int partition_cap, const EtaSearchOptions& opt) {
  if (g.vertex_count() == 0) return BetaNResult{0, Signing{}, true};
  if (g.min_degree() == 0) throw IsolatedVertex("formula requires minimum degree >= 1");

  BetaNResult result;
  result.witness.values.assign(g.edge_count(), 0);
  for (const auto& view : component_views(g)) {
    Signing local;
    int value = 0;
    if (is_eulerian(view.graph)) {
      local = eulerian_signing(view.graph);
      value = total(local);
    } else if (view.graph.edge_count() <= partition_cap) {
      auto [eta, partition] = eta_exact(view.graph, partition_cap);
      local = signing_from_partition(view.graph, partition);
      value = eta;
    } else {
      auto [eta, partition] = eta_search(view.graph, opt);
      local = signing_from_partition(view.graph, partition);
      value = eta;
      result.exact = false;
    }
    result.value += value;
    for (std::size_t e = 0; e < view.edge_map.size(); ++e)
      result.witness.values[view.edge_map[e]] = local.values[e];
  }
  return result;
}

Signing lift_signing(const Signing& f, const SplitResult& split) {
  int m = split.graph.edge_count();
  if (static_cast<int>(f.values.size()) != m)
    throw MapMismatch("signing length does not match the split graph");
  if (static_cast<int>(split.edge_origin.size()) != m)
    throw MapMismatch("edge map length does not match the split graph");
  Signing out;
  out.values.assign(m, 0);
  std::vector<char> hit(m, 0);
  for (int e = 0; e < m; ++e) {
    int origin = split.edge_origin[e];
    if (origin < 0 || origin >= m || hit[origin]) throw MapMismatch("edge map is not a bijection");
    hit[origin] = 1;
    out.values[origin] = f.values[e];
  }
  return out;
}

std::pair<int, int> improver_potential(const Graph& g, const Signing& s) {
  return {total(s), static_cast<int>(o_f(g, s).size())};
}

namespace {

struct Candidate {
  std::string label;
  std::vector<int> edges;
};

// Generates the switch candidates derived from a closed good (-1,*) trail W
// at v. Junction sub-trails handle interior vertices with nonzero sums; when
// all junctions are balanced, trails grown outside W either splice into a
// longer closed trail (recurse) or concatenate into an open trail handled
// like the open cases.
struct ClosedTrailMoves {
  const Graph& g;
  const Signing& s;
  const std::vector<int>& sums;
  TrailSearchMode mode;
  std::vector<Candidate>& out;
  int depth_left;

  void generate(const Trail& w) {
    if (depth_left-- <= 0) return;
    int v = w.vertices.front();
    if (sums[v] <= -3) out.push_back({"M3-full", w.edges});

    int len = w.length();
    // sub-trail cuts at junctions with unbalanced sums
    for (int i = 1; i < len; ++i) {
      int x = w.vertices[i];
      if (x == v) continue;
      int prev_value = s.values[w.edges[i - 1]];
      if (sums[x] <= -1) {
        if (prev_value == -1)
          out.push_back({"M3-cut", prefix(w, i)});
        else
          out.push_back({"M3-cut", suffix(w, i)});
      } else if (sums[x] == 1) {
        if (prev_value == 1)
          out.push_back({"M3-tail", prefix(w, i)});
        else
          out.push_back({"M3-tail", suffix(w, i)});
      }
    }

    // extensions through edges not on W
    std::vector<char> on_w(g.edge_count(), 0);
    for (int e : w.edges) on_w[e] = 1;
    for (int i = 1; i < len; ++i) {
      int x = w.vertices[i];
      if (x == v) continue;
      for (int e : g.incident(x)) {
        if (on_w[e]) continue;
        GoodTrailQuery q;
        q.start = x;
        q.first_edge = e;
        q.forbidden = on_w;
        q.mode = mode;
        auto wp = find_good_trail(g, s, q);
        if (!wp) continue;
        if (wp->closed()) {
          splice(w, i, *wp);
        } else {
          concatenate(w, i, *wp);
        }
      }
    }
  }

  std::vector<int> prefix(const Trail& w, int i) const {
    return std::vector<int>(w.edges.begin(), w.edges.begin() + i);
  }
  std::vector<int> suffix(const Trail& w, int i) const {
    return std::vector<int>(w.edges.begin() + i, w.edges.end());
  }

  // Insert the closed trail wp at junction i of w when the alternation
  // matches in one of wp's two orientations, and recurse on the longer
  // closed trail.
  void splice(const Trail& w, int i, const Trail& wp) {
    int junction_value = s.values[w.edges[i - 1]];
    for (const Trail& oriented : {wp, wp.reversed()}) {
      if (s.values[oriented.edges.front()] != -junction_value) continue;
      if (s.values[oriented.edges.back()] != junction_value) continue;
      Trail combined;
      combined.vertices.assign(w.vertices.begin(), w.vertices.begin() + i + 1);
      combined.edges.assign(w.edges.begin(), w.edges.begin() + i);
      combined.vertices.insert(combined.vertices.end(), oriented.vertices.begin() + 1,
                               oriented.vertices.end());
      combined.edges.insert(combined.edges.end(), oriented.edges.begin(), oriented.edges.end());
      combined.vertices.insert(combined.vertices.end(), w.vertices.begin() + i + 1,
                               w.vertices.end());
      combined.edges.insert(combined.edges.end(), w.edges.begin() + i, w.edges.end());
      generate(combined);
      return;
    }
  }

  // Concatenate the piece of w from v to junction i with the open trail wp,
  // picking whichever side of w ends at the junction with the value that
  // keeps the alternation. The result is an open good (-1,*) trail from v
  // and gets the open-trail treatment.
  void concatenate(const Trail& w, int i, const Trail& wp) {
    int need = -s.values[wp.edges.front()];
    std::vector<int> piece;
    if (s.values[w.edges[i - 1]] == need) {
      piece = prefix(w, i);
    } else {
      piece = suffix(w, i);
      std::reverse(piece.begin(), piece.end());
    }
    piece.insert(piece.end(), wp.edges.begin(), wp.edges.end());
    int last_value = s.values[wp.edges.back()];
    int far = wp.vertices.back();
    if (last_value == -1 && sums[far] <= -1) out.push_back({"M3-ext1", std::move(piece)});
    else if (last_value == 1 && sums[far] == 1) out.push_back({"M3-ext2", std::move(piece)});
  }
};

std::vector<Candidate> moves_for(const Graph& g, const Signing& s, const std::vector<int>& sums,
                                 int v, TrailSearchMode mode) {
  std::vector<Candidate> out;
  if (mode == TrailSearchMode::Longest) {
    GoodTrailQuery q;
    q.start = v;
    q.first_sign = -1;
    q.mode = mode;
    q.require_open = true;
    q.end_sign = -1;
    if (auto w = find_good_trail(g, s, q); w && sums[w->vertices.back()] <= -1)
      out.push_back({"M1", w->edges});
    q.end_sign = 1;
    if (auto w = find_good_trail(g, s, q); w && sums[w->vertices.back()] == 1)
      out.push_back({"M2", w->edges});
    q.end_sign.reset();
    q.require_open.reset();
    if (auto w = find_good_trail(g, s, q); w && w->closed()) {
      ClosedTrailMoves closed{g, s, sums, mode, out, g.edge_count()};
      closed.generate(*w);
    }
  } else {
    auto w = find_maximal_good_trail(g, s, v, -1, {}, mode);
    if (!w) return out;
    if (!w->closed()) {
      int last = s.values[w->edges.back()];
      int far = w->vertices.back();
      if (last == -1 && sums[far] <= -1) out.push_back({"M1", w->edges});
      else if (last == 1 && sums[far] == 1) out.push_back({"M2", w->edges});
    } else {
      ClosedTrailMoves closed{g, s, sums, mode, out, g.edge_count()};
      closed.generate(*w);
    }
  }
  return out;
}

}  // namespace

ImproverState switching_improver(const Graph& g, const Signing& start,
                                 std::optional<TrailSearchMode> mode_opt) {
  if (!is_n_submatching(g, start))
    throw InvalidParameter("improver input must satisfy the constraint at every vertex");
  TrailSearchMode mode = mode_opt.value_or(g.edge_count() <= 20 ? TrailSearchMode::Longest
                                                                : TrailSearchMode::Greedy);
  ImproverState state{start, improver_potential(g, start), {}};
  for (;;) {
    auto sums = vertex_sums(g, state.signing);
    bool applied = false;
    for (int v = 0; v < g.vertex_count() && !applied; ++v) {
      if (sums[v] > -2) continue;
      for (auto& cand : moves_for(g, state.signing, sums, v, mode)) {
        Signing next = switch_edge_set(state.signing, cand.edges);
        if (!is_n_submatching(g, next)) continue;
        auto pot = improver_potential(g, next);
        if (pot <= state.potential) continue;
        state.signing = std::move(next);
        state.potential = pot;
        state.log.push_back({cand.label, cand.edges});
        applied = true;
        break;
      }
    }
    if (!applied) break;
  }
  return state;
}

ProbeReport improver_optimality_probe(const Graph& g, int runs, std::uint64_t seed,
                                      int bruteforce_cap) {
  if (runs < 1) throw InvalidParameter("probe needs at least one run");
  ProbeReport report;
  if (g.edge_count() <= bruteforce_cap) report.oracle_beta_n = beta_table(g, bruteforce_cap).beta[g.vertex_count()];
  std::mt19937_64 rng(seed);
  report.max_total = INT32_MIN;
  for (int r = 0; r < runs; ++r) {
    Signing start = random_n_submatching(g, rng);
    auto state = switching_improver(g, start);
    ProbeRun run;
    run.start_total = total(start);
    run.final_total = total(state.signing);
    run.moves = static_cast<int>(state.log.size());
    report.max_total = std::max(report.max_total, run.final_total);
    report.runs.push_back(run);
  }
  return report;
}

}  // namespace submatch
