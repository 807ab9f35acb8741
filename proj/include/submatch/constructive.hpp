#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submatch/graph.hpp"
#include "submatch/oracle.hpp"
#include "submatch/signing.hpp"

namespace submatch {

// Builds a complete partition from a perfect pairing of the odd vertices:
// one flagged virtual edge per pair makes every degree even, an Euler
// circuit of the extended multigraph is cut at the virtual edges, and the
// arcs between cuts are the trails. `rotation` selects a deterministic
// adjacency rotation for the circuit (different rotations can give different
// partitions for the same pairing).
CompletePartition pairing_partition(const Graph& g,
                                    const std::vector<std::pair<int, int>>& pairing,
                                    int rotation = 0);

struct EtaSearchOptions {
  long long max_pairings = 20000;  // (2k-1)!! pairings enumerated when under this
  int circuit_variants = 4;        // rotations tried per pairing
};

// Best tau found over pairings x circuit rotations. The result is a valid
// complete partition, so the value is always a lower bound for eta; ties are
// broken by canonical partition key.
std::pair<int, CompletePartition> eta_search(const Graph& g, const EtaSearchOptions& opt = {});

// Alternating values along each trail: odd-length trails start with +1 and
// contribute +1 to the total, even-length trails start with -1 and
// contribute 0. The result has every vertex sum in {-1, 0, +1} and total
// equal to tau(p).
Signing signing_from_partition(const Graph& g, const CompletePartition& p);

// Alternating values along an Euler circuit, starting with -1. Total is 0
// for even edge count and -1 for odd; every vertex sum stays <= 0.
Signing eulerian_signing(const Graph& g);

struct BetaNResult {
  int value = 0;
  Signing witness;
  bool exact = true;  // false when any component fell back to eta_search
};

// Closed form for beta at k = n, per component: Euler-parity value for
// Eulerian components, eta (exact under the cap, searched above it) with a
// partition witness otherwise. Requires minimum degree >= 1.
BetaNResult beta_n_formula(const Graph& g, int partition_cap = kDefaultPartitionCap,
                           const EtaSearchOptions& opt = {});

// Transports a signing of a split graph back to the original through the
// split's edge map. Preserves totals; a (k+1)-submatching of the split lands
// as a k-submatching of the original.
Signing lift_signing(const Signing& f, const SplitResult& split);

struct ImproverMove {
  std::string label;       // M1, M2, M3-full, M3-cut, M3-tail, M3-ext1, M3-ext2
  std::vector<int> edges;  // switched edge indices, in trail order
};

struct ImproverState {
  Signing signing;
  std::pair<int, int> potential;  // (total, |O_f|), ordered lexicographically
  std::vector<ImproverMove> log;
};

std::pair<int, int> improver_potential(const Graph& g, const Signing& s);

// Local search over good-trail switches. While some vertex has sum <= -2,
// candidate moves are tried in a fixed order and one is applied only after
// re-verifying that the new signing is still valid at every vertex and that
// the potential strictly increased. Terminates when no vertex is below -1
// or no guarded move applies; on connected non-Eulerian graphs the fixpoint
// has every vertex sum >= -1. Longest-mode searches are used up to 20 edges,
// greedy beyond. The input must already satisfy the constraint everywhere.
ImproverState switching_improver(const Graph& g, const Signing& start,
                                 std::optional<TrailSearchMode> mode = std::nullopt);

struct ProbeRun {
  int start_total = 0;
  int final_total = 0;
  int moves = 0;
};

struct ProbeReport {
  int max_total = 0;
  std::optional<int> oracle_beta_n;  // set when the graph is under the cap
  std::vector<ProbeRun> runs;
};

// Runs the improver from seeded random valid signings and reports the best
// total reached next to the exact value when available.
ProbeReport improver_optimality_probe(const Graph& g, int runs, std::uint64_t seed,
                                      int bruteforce_cap = kDefaultBruteforceCap);

}  // namespace submatch
