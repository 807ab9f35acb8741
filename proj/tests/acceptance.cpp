// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is exercised at full strength; the corpora are enumerated
// or generated from fixed seeds so every run is reproducible.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "submatch/constructive.hpp"
#include "submatch/errors.hpp"
#include "submatch/report.hpp"
#include "test_support.hpp"

using namespace submatch;

namespace {

int failures = 0;

struct Criterion {
  const char* name;
  int violations = 0;
  int cases = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(const char* n) : name(n) {}

  void expect(bool ok) {
    ++cases;
    if (!ok) ++violations;
  }

  void finish(const std::string& extra = "") {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (violations == 0) {
      std::printf("[PASS] %s (%d checks, %.1fs)%s\n", name, cases, secs,
                  extra.empty() ? "" : (" " + extra).c_str());
    } else {
      std::printf("[FAIL] %s (%d of %d checks failed)\n", name, violations, cases);
      ++failures;
    }
  }
};

// Seeded connected graphs with an edge cap; used by several criteria.
std::vector<Graph> seeded_connected(int count, int n_lo, int n_hi, int m_cap,
                                    std::uint64_t seed_base) {
  std::vector<Graph> out;
  std::uint64_t seed = seed_base;
  while (static_cast<int>(out.size()) < count) {
    ++seed;
    std::mt19937_64 rng(seed);
    int n = n_lo + static_cast<int>(detail::rng_below(rng, n_hi - n_lo + 1));
    int max_m = std::min(m_cap, n * (n - 1) / 2);
    if (max_m < n - 1) continue;
    int m = (n - 1) + static_cast<int>(detail::rng_below(rng, max_m - (n - 1) + 1));
    out.push_back(random_connected(n, m, seed));
  }
  return out;
}

void criterion_eulerian_formula() {
  Criterion c("1 Eulerian closed form: beta_n is 0 (even m) or -1 (odd m), witnessed");
  int graphs = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : testsupport::all_connected_eulerian_graphs(n)) {
      ++graphs;
      int expected = g.edge_count() % 2 == 0 ? 0 : -1;
      auto table = beta_table(g);
      c.expect(table.beta[g.vertex_count()] == expected);
      Signing witness = eulerian_signing(g);
      c.expect(is_n_submatching(g, witness));
      c.expect(total(witness) == expected);
    }
  }
  c.finish("over " + std::to_string(graphs) + " Eulerian graphs");
}

void criterion_beta_n_equals_eta() {
  Criterion c("2 beta_n = eta = closed form on connected non-Eulerian graphs, witnessed");
  std::vector<Graph> corpus;
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testsupport::all_connected_graphs(n))
      if (!is_eulerian(g)) corpus.push_back(g);
  int enumerated = static_cast<int>(corpus.size());
  for (const Graph& g : seeded_connected(30, 6, 7, 12, 9000))
    if (!is_eulerian(g)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    int n = g.vertex_count();
    auto table = beta_table(g);
    auto [eta, partition] = eta_exact(g);
    auto formula = beta_n_formula(g);
    c.expect(table.beta[n] == eta);
    c.expect(formula.value == eta);
    Signing witness = signing_from_partition(g, partition);
    c.expect(is_n_submatching(g, witness));
    c.expect(total(witness) == eta);
  }
  c.finish("over " + std::to_string(corpus.size()) + " graphs (" +
           std::to_string(enumerated) + " enumerated on <= 5 vertices)");
}

void criterion_connected_bound() {
  Criterion c("3 connected bound: beta_k >= n-k-1 for all k on every connected graph, n <= 6");
  int on_six = 0;
  for (int n = 2; n <= 6; ++n) {
    auto corpus = testsupport::all_connected_graphs(n);
    if (n == 6) on_six = static_cast<int>(corpus.size());
    for (const Graph& g : corpus) {
      auto table = beta_table(g);
      auto check = verify_connected_bound(g, table);
      c.expect(check.all_hold());
    }
  }
  c.expect(on_six == 112);  // enumerator self-check
  c.finish("(112 graphs on exactly 6 vertices)");
}

void criterion_component_bound() {
  Criterion c("4 component bound: beta_k >= n-k-omega for all k on seeded disjoint unions");
  int built = 0;
  std::uint64_t seed = 40000;
  while (built < 200) {
    ++seed;
    std::mt19937_64 rng(seed);
    int parts = 2 + static_cast<int>(detail::rng_below(rng, 2));
    std::vector<Graph> gs;
    int mtot = 0;
    for (int i = 0; i < parts; ++i) {
      int n = 2 + static_cast<int>(detail::rng_below(rng, 5));
      int max_m = n * (n - 1) / 2;
      int m = (n - 1) + static_cast<int>(detail::rng_below(rng, max_m - (n - 1) + 1));
      gs.push_back(random_connected(n, m, rng()));
      mtot += m;
    }
    if (mtot > 18) continue;
    ++built;
    Graph g = disjoint_union(gs);
    auto table = beta_table(g);
    auto check = verify_conjecture_bound(g, table);
    c.expect(check.all_hold());
  }
  c.finish("over " + std::to_string(built) + " unions");
}

void criterion_split_claim() {
  Criterion c("5 split claim: beta_k(G) >= beta_{k+1}(G') plus witness lift, seeded splits");
  int splits = 0;
  std::uint64_t seed = 70000;
  while (splits < 100) {
    ++seed;
    std::mt19937_64 rng(seed);
    int n = 4 + static_cast<int>(detail::rng_below(rng, 4));
    int max_m = std::min(14, n * (n - 1) / 2);
    int m = (n - 1) + static_cast<int>(detail::rng_below(rng, max_m - (n - 1) + 1));
    Graph g = random_connected(n, m, seed);
    auto triples = valid_split_triples(g);
    if (triples.empty()) continue;
    auto [v, w, x] = triples[detail::rng_below(rng, triples.size())];
    ++splits;
    for (const auto& verdict : verify_split_claim_all(g, v, w, x)) {
      c.expect(verdict.beta_inequality);
      c.expect(verdict.lift_is_submatching);
      c.expect(verdict.lift_total_equal);
    }
  }
  c.finish("over " + std::to_string(splits) + " splits");
}

void criterion_golden_values() {
  Criterion c("6 golden values: C_3 table, K_4, paw, K_{1,3}, P_4");
  auto c3 = beta_table(cycle(3));
  c.expect(c3.beta[1] == 1);
  c.expect(c3.beta[2] == 1);
  c.expect(c3.beta[3] == -1);
  auto k4 = beta_table(complete(4));
  c.expect(k4.beta[4] == 2);
  c.expect(eta_exact(complete(4)).first == 2);
  c.expect(eta_exact(testsupport::paw()).first == 0);
  c.expect(eta_exact(star(4)).first == 1);
  c.expect(eta_exact(path(4)).first == 1);
  c.finish();
}

void criterion_improver() {
  Criterion c("7 improver: strict potential growth, valid fixpoints, min sum >= -1");
  int pairs = 0;
  std::uint64_t seed = 100000;
  std::vector<Graph> graphs = seeded_connected(125, 3, 8, 12, 110000);
  std::mt19937_64 rng(31337);
  for (const Graph& g : graphs) {
    for (int r = 0; r < 4; ++r) {
      ++pairs;
      Signing start = random_n_submatching(g, rng);
      auto state = switching_improver(g, start);
      Signing replay = start;
      auto pot = improver_potential(g, replay);
      bool monotone = true;
      for (const auto& mv : state.log) {
        replay = switch_edge_set(replay, mv.edges);
        auto next = improver_potential(g, replay);
        if (next <= pot) monotone = false;
        pot = next;
      }
      c.expect(monotone);
      c.expect(replay == state.signing);
      c.expect(is_n_submatching(g, state.signing));
      if (!is_eulerian(g)) {
        auto sums = vertex_sums(g, state.signing);
        bool above = true;
        for (int v = 0; v < g.vertex_count(); ++v) above = above && sums[v] >= -1;
        c.expect(above);
      }
    }
  }
  (void)seed;
  c.finish("over " + std::to_string(pairs) + " (graph, signing) pairs");
}

void criterion_determinism() {
  Criterion c("8 determinism: identical seeds give byte-identical reports modulo timings");
  ReportOptions opt;
  opt.seed = 99;
  for (const Graph& g : seeded_connected(8, 4, 7, 10, 500)) {
    auto a = without_timings(solve_record(g, opt).record).dump();
    auto b = without_timings(solve_record(g, opt).record).dump();
    c.expect(a == b);
    auto v1 = without_timings(verify_record(g, BoundKind::Split, opt).record).dump();
    auto v2 = without_timings(verify_record(g, BoundKind::Split, opt).record).dump();
    c.expect(v1 == v2);
    opt.improve_runs = 4;
    auto i1 = without_timings(improve_record(g, opt).record).dump();
    auto i2 = without_timings(improve_record(g, opt).record).dump();
    c.expect(i1 == i2);
    opt.improve_runs = 1;
    auto e1 = without_timings(verify_record(g, BoundKind::Formula, opt).record).dump();
    auto e2 = without_timings(verify_record(g, BoundKind::Formula, opt).record).dump();
    c.expect(e1 == e2);
  }
  c.finish();
}

}  // namespace

int main() {
  criterion_eulerian_formula();
  criterion_beta_n_equals_eta();
  criterion_connected_bound();
  criterion_component_bound();
  criterion_split_claim();
  criterion_golden_values();
  criterion_improver();
  criterion_determinism();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
