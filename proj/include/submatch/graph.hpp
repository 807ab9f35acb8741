#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace submatch {

// Simple undirected graph with stable edge indices. Vertices are 0..n-1;
// edge i is an unordered pair of distinct vertices. The edge index list is
// the canonical identity used by signings, trails and partitions, so the
// edge order is fixed at construction and never changes.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int e) const { return edges_[e]; }

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  int min_degree() const;
  // Edge indices incident to v, ascending.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int other_end(int e, int v) const;
  std::optional<int> find_edge(int u, int v) const;
  bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;
};

// Walk with no repeated edge. Vertices may repeat. vertices.size() ==
// edges.size() + 1 and edges[i] joins vertices[i], vertices[i+1].
struct Trail {
  std::vector<int> vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  Trail reversed() const;
  void validate(const Graph& g) const;
};

// Builds the vertex sequence for an edge sequence starting at `start`.
Trail trail_from_edges(const Graph& g, int start, const std::vector<int>& edge_seq);

// Partition of the edge set into k open trails, where the graph has 2k odd
// vertices; the trail endpoints are exactly the odd vertices, each used once.
struct CompletePartition {
  std::vector<Trail> trails;

  // Key: each trail as the lexicographically smaller of its edge sequence
  // and the reverse, trails sorted by that key.
  std::vector<std::vector<int>> canonical_key() const;
  void canonicalize(const Graph& g);
  void validate(const Graph& g) const;
};

std::vector<std::vector<int>> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
// Connected with every degree even and at least one edge.
bool is_eulerian(const Graph& g);
std::vector<int> odd_vertices(const Graph& g);

// Closed trail covering every edge exactly once (Hierholzer). The rotation
// offsets every adjacency list, giving deterministic circuit variants.
// Throws NotEulerian if some degree is odd, the edge-induced subgraph is
// disconnected, or there are no edges.
Trail euler_circuit(const Graph& g, int adjacency_rotation = 0);

// Result of splitting vertex v: edges vw and vx are replaced by v'w and xv',
// where v' = new_vertex. edge_origin maps each edge index of `graph` to the
// edge index of the input it carries values from (identity by construction,
// kept explicit because signing lifts consume it).
struct SplitResult {
  Graph graph;
  int new_vertex;
  std::vector<int> edge_origin;
  int v, w, x;
};

SplitResult vertex_split(const Graph& g, int v, int w, int x);

// Triples (v, w, x) for which the split is guaranteed to keep the graph
// connected: vw, vx edges, w != x, and some third neighbor u of v reaches w
// in G - v (so v lies on a cycle through w avoiding x's edge).
std::vector<std::array<int, 3>> valid_split_triples(const Graph& g);

struct ComponentView {
  Graph graph;
  std::vector<int> vertices;  // local -> global vertex
  std::vector<int> edge_map;  // local -> global edge index
};
std::vector<ComponentView> component_views(const Graph& g);

Graph disjoint_union(const std::vector<Graph>& parts);

// Generators. Deterministic; random_connected is reproducible per seed.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int n);
Graph random_connected(int n, int m, std::uint64_t seed);

namespace detail {

// Euler circuit over an explicit edge list (parallel edges allowed); returns
// edge positions in traversal order. Used by both the public wrapper and the
// virtual-edge pairing construction.
std::vector<int> euler_circuit_positions(int n, const std::vector<std::pair<int, int>>& edges,
                                         int rotation);

// rng() % bound with the 64-bit engine; good enough here and keeps results
// identical across standard library implementations.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound);

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace detail

}  // namespace submatch
