#include "submatch/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "submatch/errors.hpp"

namespace submatch {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n), edges_(std::move(edge_list)) {
  if (n < 0) throw InvalidParameter("negative vertex count");
  incident_.assign(n_, {});
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InvalidParameter("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw SimplicityViolation("loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw SimplicityViolation("duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::other_end(int e, int v) const {
  auto [a, b] = edges_[e];
  return a == v ? b : a;
}

std::optional<int> Graph::find_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  const auto& smaller = degree(u) <= degree(v) ? incident_[u] : incident_[v];
  for (int e : smaller) {
    auto [a, b] = edges_[e];
    if ((a == u && b == v) || (a == v && b == u)) return e;
  }
  return std::nullopt;
}

Trail Trail::reversed() const {
  Trail r;
  r.vertices.assign(vertices.rbegin(), vertices.rend());
  r.edges.assign(edges.rbegin(), edges.rend());
  return r;
}

void Trail::validate(const Graph& g) const {
  if (edges.empty()) throw InvalidParameter("trail must contain at least one edge");
  if (vertices.size() != edges.size() + 1) throw InvalidParameter("trail vertex/edge count mismatch");
  std::vector<char> used(g.edge_count(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int e = edges[i];
    if (e < 0 || e >= g.edge_count()) throw InvalidParameter("trail edge index out of range");
    if (used[e]) throw InvalidParameter("trail repeats an edge");
    used[e] = 1;
    auto [a, b] = g.edge(e);
    int from = vertices[i], to = vertices[i + 1];
    if (!((a == from && b == to) || (a == to && b == from)))
      throw InvalidParameter("trail edge does not join consecutive vertices");
  }
}

Trail trail_from_edges(const Graph& g, int start, const std::vector<int>& edge_seq) {
  Trail t;
  t.vertices.push_back(start);
  int cur = start;
  for (int e : edge_seq) {
    cur = g.other_end(e, cur);
    t.edges.push_back(e);
    t.vertices.push_back(cur);
  }
  return t;
}

std::vector<std::vector<int>> CompletePartition::canonical_key() const {
  std::vector<std::vector<int>> key;
  key.reserve(trails.size());
  for (const auto& t : trails) {
    std::vector<int> fwd = t.edges;
    std::vector<int> rev(fwd.rbegin(), fwd.rend());
    key.push_back(std::min(fwd, rev));
  }
  std::sort(key.begin(), key.end());
  return key;
}

void CompletePartition::canonicalize(const Graph&) {
  for (auto& t : trails) {
    std::vector<int> rev(t.edges.rbegin(), t.edges.rend());
    if (rev < t.edges) t = t.reversed();
  }
  std::sort(trails.begin(), trails.end(),
            [](const Trail& a, const Trail& b) { return a.edges < b.edges; });
}

void CompletePartition::validate(const Graph& g) const {
  std::vector<int> odd = odd_vertices(g);
  if (static_cast<int>(trails.size()) * 2 != static_cast<int>(odd.size()))
    throw InvalidParameter("trail count must be half the odd-vertex count");
  std::vector<char> covered(g.edge_count(), 0);
  std::vector<char> endpoint_used(g.vertex_count(), 0);
  std::vector<char> is_odd(g.vertex_count(), 0);
  for (int v : odd) is_odd[v] = 1;
  for (const auto& t : trails) {
    t.validate(g);
    if (t.closed()) throw InvalidParameter("complete partition trail must be open");
    for (int e : t.edges) {
      if (covered[e]) throw InvalidParameter("edge covered twice");
      covered[e] = 1;
    }
    for (int v : {t.vertices.front(), t.vertices.back()}) {
      if (!is_odd[v]) throw InvalidParameter("trail endpoint has even degree");
      if (endpoint_used[v]) throw InvalidParameter("odd vertex used as endpoint twice");
      endpoint_used[v] = 1;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!covered[e]) throw InvalidParameter("edge not covered by any trail");
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> comps;
  for (int root = 0; root < n; ++root) {
    if (label[root] != -1) continue;
    int id = static_cast<int>(comps.size());
    comps.push_back({});
    std::queue<int> q;
    q.push(root);
    label[root] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comps[id].push_back(v);
      for (int e : g.incident(v)) {
        int w = g.other_end(e, v);
        if (label[w] == -1) {
          label[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  return comps;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_eulerian(const Graph& g) {
  if (g.edge_count() == 0 || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

std::vector<int> odd_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 1) out.push_back(v);
  return out;
}

namespace detail {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<int> euler_circuit_positions(int n, const std::vector<std::pair<int, int>>& edges,
                                         int rotation) {
  int m = static_cast<int>(edges.size());
  if (m == 0) throw NotEulerian("no edges");
  std::vector<std::vector<int>> adj(n);
  for (int p = 0; p < m; ++p) {
    adj[edges[p].first].push_back(p);
    adj[edges[p].second].push_back(p);
  }
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() % 2 != 0) throw NotEulerian("vertex " + std::to_string(v) + " has odd degree");
    if (rotation > 0 && !adj[v].empty())
      std::rotate(adj[v].begin(), adj[v].begin() + rotation % adj[v].size(), adj[v].end());
  }

  int start = 0;
  while (start < n && adj[start].empty()) ++start;

  std::vector<char> used(m, 0);
  std::vector<std::size_t> ptr(n, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, incoming edge position)
  stack.push_back({start, -1});
  std::vector<int> circuit;
  circuit.reserve(m);
  while (!stack.empty()) {
    auto [v, in_e] = stack.back();
    int chosen = -1;
    while (ptr[v] < adj[v].size()) {
      int p = adj[v][ptr[v]];
      if (!used[p]) {
        chosen = p;
        break;
      }
      ++ptr[v];
    }
    if (chosen >= 0) {
      used[chosen] = 1;
      int w = edges[chosen].first == v ? edges[chosen].second : edges[chosen].first;
      stack.push_back({w, chosen});
    } else {
      stack.pop_back();
      if (in_e >= 0) circuit.push_back(in_e);
    }
  }
  if (static_cast<int>(circuit.size()) != m)
    throw NotEulerian("edge-induced subgraph is disconnected");
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace detail

Trail euler_circuit(const Graph& g, int adjacency_rotation) {
  auto positions = detail::euler_circuit_positions(g.vertex_count(), g.edges(), adjacency_rotation);
  int start = 0;
  while (start < g.vertex_count() && g.degree(start) == 0) ++start;
  return trail_from_edges(g, start, positions);
}

SplitResult vertex_split(const Graph& g, int v, int w, int x) {
  int n = g.vertex_count();
  if (v < 0 || v >= n || w < 0 || w >= n || x < 0 || x >= n)
    throw InvalidSplit("vertex out of range");
  if (w == x) throw InvalidSplit("w and x must differ");
  auto e_vw = g.find_edge(v, w);
  if (!e_vw) throw MissingEdge("edge vw not present");
  auto e_vx = g.find_edge(v, x);
  if (!e_vx) throw MissingEdge("edge vx not present");

  int vp = n;  // the new vertex
  auto new_edges = g.edges();
  auto substitute = [&](int e) {
    auto& pr = new_edges[e];
    if (pr.first == v)
      pr.first = vp;
    else
      pr.second = vp;
  };
  substitute(*e_vw);
  substitute(*e_vx);

  std::vector<int> origin(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) origin[e] = e;
  return SplitResult{Graph(n + 1, std::move(new_edges)), vp, std::move(origin), v, w, x};
}

std::vector<std::array<int, 3>> valid_split_triples(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 3) continue;
    // component labels of G - v
    std::vector<int> label(n, -1);
    label[v] = -2;
    int next = 0;
    for (int root = 0; root < n; ++root) {
      if (root == v || label[root] != -1) continue;
      std::queue<int> q;
      q.push(root);
      label[root] = next;
      while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int e : g.incident(a)) {
          int b = g.other_end(e, a);
          if (b == v || label[b] != -1) continue;
          label[b] = next;
          q.push(b);
        }
      }
      ++next;
    }
    std::vector<int> nb;
    for (int e : g.incident(v)) nb.push_back(g.other_end(e, v));
    std::sort(nb.begin(), nb.end());
    for (int w : nb) {
      for (int x : nb) {
        if (w == x) continue;
        bool ok = false;
        for (int u : nb) {
          if (u == w || u == x) continue;
          if (label[u] == label[w]) {
            ok = true;
            break;
          }
        }
        if (ok) out.push_back({v, w, x});
      }
    }
  }
  return out;
}

std::vector<ComponentView> component_views(const Graph& g) {
  auto comps = components(g);
  std::vector<int> local_id(g.vertex_count(), -1);
  std::vector<ComponentView> views;
  views.reserve(comps.size());
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) local_id[comp[i]] = static_cast<int>(i);
    ComponentView view;
    view.vertices = comp;
    std::vector<std::pair<int, int>> local_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (local_id[u] >= 0) {  // both ends lie in the same component
        local_edges.push_back({local_id[u], local_id[v]});
        view.edge_map.push_back(e);
      }
    }
    view.graph = Graph(static_cast<int>(comp.size()), std::move(local_edges));
    views.push_back(std::move(view));
    for (int v : comp) local_id[v] = -1;
  }
  return views;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) edges.push_back({u + n, v + n});
    n += p.vertex_count();
  }
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  if (n < 1) throw InvalidParameter("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw InvalidParameter("complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph star(int n) {
  if (n < 2) throw InvalidParameter("star needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("vertex count must be positive");
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  int min_edges = n >= 2 ? n - 1 : 0;
  if (m < min_edges || m > max_edges) throw InvalidParameter("edge count out of range for connected graph");

  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  detail::shuffle(order, rng);

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(detail::rng_below(rng, i));
    int u = order[j], v = order[i];
    edges.push_back({u, v});
    used.insert(std::minmax(u, v));
  }
  std::vector<std::pair<int, int>> spare;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used.count({u, v})) spare.push_back({u, v});
  detail::shuffle(spare, rng);
  for (int i = 0; static_cast<int>(edges.size()) < m; ++i) edges.push_back(spare[i]);
  return Graph(n, std::move(edges));
}

}  // namespace submatch
