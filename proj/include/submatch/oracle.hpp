#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "submatch/graph.hpp"
#include "submatch/signing.hpp"

namespace submatch {

// Exhaustive enumeration caps. Signings are enumerated as 2^m binary
// counters; complete-partition enumeration is combinatorial in m.
inline constexpr int kDefaultBruteforceCap = 22;
inline constexpr int kDefaultPartitionCap = 12;

// Exact beta values for every k, with one witness signing per k. beta[k] is
// the maximum total over all signings whose submatch count is at least k;
// index 0 is the unconstrained extension beta_0 = m (used by the component
// decomposition only).
struct BetaTable {
  std::string graph_id;  // canonical edge-list text
  int n = 0;
  int m = 0;
  int omega = 0;
  int odd_count = 0;
  std::vector<int> beta;        // size n+1, index k
  std::vector<Signing> witness; // size n+1, index k
};

// Single pass over all 2^m signings (bit i = edge i, 0 -> -1), bucketing the
// best total per exact submatch count and suffix-maximizing. Witnesses are
// the first maximizers in counter order. Throws TooLarge above the cap.
BetaTable beta_table(const Graph& g, int cap = kDefaultBruteforceCap);

// Visits every complete partition exactly once up to trail reversal and
// trail order; emitted partitions are canonicalized. Throws NotApplicable if
// the graph is Eulerian or disconnected, TooLarge above the cap.
void enumerate_complete_partitions(const Graph& g,
                                   const std::function<void(const CompletePartition&)>& visit,
                                   int cap = kDefaultPartitionCap);
std::vector<CompletePartition> all_complete_partitions(const Graph& g,
                                                       int cap = kDefaultPartitionCap);

// Number of odd-length trails.
int tau(const CompletePartition& p);

// Maximum tau over all complete partitions, with the first argmax in
// canonical-key order.
std::pair<int, CompletePartition> eta_exact(const Graph& g, int cap = kDefaultPartitionCap);

struct BoundCheck {
  std::vector<char> holds;  // index k-1, k = 1..n
  bool all_hold() const;
};

// beta_k >= n - k - 1 for every k; requires a connected graph.
BoundCheck verify_connected_bound(const Graph& g, const BetaTable& table);
// beta_k >= n - k - omega for every k; requires minimum degree >= 1.
BoundCheck verify_conjecture_bound(const Graph& g, const BetaTable& table);

// Checks beta_k(G) >= beta_{k+1}(G') across a vertex split, and that the
// lifted optimal witness of G' lands as a valid k-submatching of G with the
// same total.
struct SplitVerdict {
  int k = 0;
  int beta_g = 0;
  int beta_split = 0;
  bool beta_inequality = false;
  bool lift_is_submatching = false;
  bool lift_total_equal = false;
  bool holds() const { return beta_inequality && lift_is_submatching && lift_total_equal; }
};

SplitVerdict verify_split_claim(const Graph& g, int v, int w, int x, int k,
                                int cap = kDefaultBruteforceCap);
std::vector<SplitVerdict> verify_split_claim_all(const Graph& g, int v, int w, int x,
                                                 int cap = kDefaultBruteforceCap);

// Best sum of per-component beta values over all ways to distribute the k
// constrained vertices (k_i >= 0, sum k_i = k, k_i <= n_i), with
// beta_0(G_i) = m_i. allocation[i] is the chosen k_i in component order.
struct ComponentAllocation {
  int value = 0;
  std::vector<int> allocation;
};

ComponentAllocation beta_component_sum(const Graph& g, int k, int cap = kDefaultBruteforceCap);

}  // namespace submatch
