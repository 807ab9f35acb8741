#include "submatch/report.hpp"

#include <chrono>

#include "submatch/errors.hpp"
#include "submatch/formats.hpp"

namespace submatch {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json base_record(const Graph& g) {
  json rec;
  rec["graph"] = serialize_edge_list(g);
  rec["n"] = g.vertex_count();
  rec["m"] = g.edge_count();
  rec["omega"] = component_count(g);
  rec["beta"] = nullptr;
  rec["eta"] = nullptr;
  rec["formula"] = nullptr;
  rec["verdicts"] = json::object();
  rec["witness"] = json::object();
  rec["timings_ms"] = json::object();
  return rec;
}

json partition_json(const CompletePartition& p) {
  json trails = json::array();
  for (const auto& t : p.trails) trails.push_back(t.edges);
  return trails;
}

json moves_json(const std::vector<ImproverMove>& log) {
  json moves = json::array();
  for (const auto& mv : log) moves.push_back({{"case", mv.label}, {"edges", mv.edges}});
  return moves;
}

}  // namespace

BoundKind bound_kind_from_string(const std::string& name) {
  if (name == "conjecture") return BoundKind::Conjecture;
  if (name == "connected") return BoundKind::Connected;
  if (name == "split") return BoundKind::Split;
  if (name == "formula") return BoundKind::Formula;
  throw InvalidParameter("unknown bound: " + name);
}

json beta_table_json(const BetaTable& table) {
  json out;
  out["graph"] = table.graph_id;
  out["n"] = table.n;
  out["m"] = table.m;
  out["omega"] = table.omega;
  out["odd_vertices"] = table.odd_count;
  json beta = json::array();
  json witnesses = json::array();
  for (int k = 1; k <= table.n; ++k) {
    beta.push_back(table.beta[k]);
    witnesses.push_back(signing_to_string(table.witness[k]));
  }
  out["beta"] = beta;
  out["witnesses"] = witnesses;
  out["verdicts"] = json::object();
  return out;
}

RecordResult solve_record(const Graph& g, const ReportOptions& opt) {
  auto t0 = Clock::now();
  RecordResult result;
  result.record = base_record(g);
  json& rec = result.record;

  bool within_cap = g.edge_count() <= opt.cap_bruteforce;
  if (!within_cap && !opt.allow_heuristic)
    throw TooLarge("edge count " + std::to_string(g.edge_count()) + " exceeds brute-force cap");
  if (!within_cap) result.caps_hit = true;

  int n = g.vertex_count();
  bool want_formula = opt.kspec == "all" || opt.kspec == "n" ||
                      (opt.kspec != "all" && std::stoi(opt.kspec) == n);
  if (opt.kspec != "all" && opt.kspec != "n") {
    int k = std::stoi(opt.kspec);
    if (k < 1 || k > n) throw InvalidK("k must lie in 1..n");
  }

  BetaTable table;
  if (within_cap) {
    table = beta_table(g, opt.cap_bruteforce);
    json beta = json::array();
    json witnesses = json::array();
    for (int k = 1; k <= n; ++k) {
      beta.push_back(table.beta[k]);
      witnesses.push_back(signing_to_string(table.witness[k]));
    }
    rec["beta"] = beta;
    rec["witness"]["signings"] = witnesses;
  }

  if (want_formula && n > 0 && g.min_degree() >= 1) {
    auto formula = beta_n_formula(g, opt.cap_partitions, opt.eta);
    rec["formula"] = formula.value;
    rec["witness"]["formula_signing"] = signing_to_string(formula.witness);
    if (!is_eulerian(g) && is_connected(g) && g.edge_count() <= opt.cap_partitions) {
      auto [eta, partition] = eta_exact(g, opt.cap_partitions);
      rec["eta"] = eta;
      rec["witness"]["partition"] = partition_json(partition);
    }
    if (within_cap) {
      bool agree = formula.value == table.beta[n];
      rec["verdicts"]["formula_agrees"] = agree;
      if (!agree) result.failed = true;
    }
  }

  rec["timings_ms"]["total"] = ms_since(t0);
  return result;
}

RecordResult verify_record(const Graph& g, BoundKind kind, const ReportOptions& opt) {
  auto t0 = Clock::now();
  RecordResult result;
  result.record = base_record(g);
  json& rec = result.record;

  if (g.edge_count() > opt.cap_bruteforce)
    throw TooLarge("edge count " + std::to_string(g.edge_count()) + " exceeds brute-force cap");

  try {
    switch (kind) {
      case BoundKind::Conjecture: {
        auto table = beta_table(g, opt.cap_bruteforce);
        auto check = verify_conjecture_bound(g, table);
        json beta = json::array();
        for (int k = 1; k <= table.n; ++k) beta.push_back(table.beta[k]);
        rec["beta"] = beta;
        rec["verdicts"]["bound"] = "conjecture";
        rec["verdicts"]["per_k"] = check.holds;
        rec["verdicts"]["all_hold"] = check.all_hold();
        if (!check.all_hold()) result.failed = true;
        break;
      }
      case BoundKind::Connected: {
        auto table = beta_table(g, opt.cap_bruteforce);
        auto check = verify_connected_bound(g, table);
        json beta = json::array();
        for (int k = 1; k <= table.n; ++k) beta.push_back(table.beta[k]);
        rec["beta"] = beta;
        rec["verdicts"]["bound"] = "connected";
        rec["verdicts"]["per_k"] = check.holds;
        rec["verdicts"]["all_hold"] = check.all_hold();
        if (!check.all_hold()) result.failed = true;
        break;
      }
      case BoundKind::Split: {
        auto triples = valid_split_triples(g);
        std::mt19937_64 rng(opt.seed);
        detail::shuffle(triples, rng);
        if (static_cast<int>(triples.size()) > opt.splits_per_graph)
          triples.resize(opt.splits_per_graph);
        json splits = json::array();
        bool all_hold = true;
        for (auto [v, w, x] : triples) {
          auto verdicts = verify_split_claim_all(g, v, w, x, opt.cap_bruteforce);
          json per_k = json::array();
          bool hold = true;
          for (const auto& sv : verdicts) {
            per_k.push_back(sv.holds());
            hold = hold && sv.holds();
          }
          splits.push_back({{"v", v}, {"w", w}, {"x", x}, {"per_k", per_k}, {"holds", hold}});
          all_hold = all_hold && hold;
        }
        rec["verdicts"]["bound"] = "split";
        rec["verdicts"]["splits"] = splits;
        rec["verdicts"]["all_hold"] = all_hold;
        if (!all_hold) result.failed = true;
        break;
      }
      case BoundKind::Formula: {
        if (g.vertex_count() > 0 && g.min_degree() == 0)
          throw IsolatedVertex("formula requires minimum degree >= 1");
        auto table = beta_table(g, opt.cap_bruteforce);
        auto formula = beta_n_formula(g, opt.cap_partitions, opt.eta);
        rec["formula"] = formula.value;
        rec["witness"]["formula_signing"] = signing_to_string(formula.witness);
        bool agree = formula.value == table.beta[table.n];
        if (is_connected(g) && !is_eulerian(g) && g.edge_count() <= opt.cap_partitions) {
          auto [eta, partition] = eta_exact(g, opt.cap_partitions);
          rec["eta"] = eta;
          rec["witness"]["partition"] = partition_json(partition);
          agree = agree && eta == table.beta[table.n];
        }
        rec["verdicts"]["bound"] = "formula";
        rec["verdicts"]["oracle_beta_n"] = table.beta[table.n];
        rec["verdicts"]["all_hold"] = agree;
        if (!agree) result.failed = true;
        break;
      }
    }
  } catch (const IsolatedVertex& e) {
    rec["verdicts"]["skipped"] = std::string("IsolatedVertex: ") + e.what();
    result.skipped = true;
  } catch (const NotConnected& e) {
    rec["verdicts"]["skipped"] = std::string("NotConnected: ") + e.what();
    result.skipped = true;
  }

  rec["timings_ms"]["total"] = ms_since(t0);
  return result;
}

RecordResult eta_record(const Graph& g, const ReportOptions& opt) {
  auto t0 = Clock::now();
  RecordResult result;
  result.record = base_record(g);
  json& rec = result.record;

  int eta_value;
  CompletePartition partition;
  if (g.edge_count() <= opt.cap_partitions) {
    std::tie(eta_value, partition) = eta_exact(g, opt.cap_partitions);
    rec["verdicts"]["exact"] = true;
  } else {
    std::tie(eta_value, partition) = eta_search(g, opt.eta);
    rec["verdicts"]["exact"] = false;
    result.caps_hit = true;
  }
  rec["eta"] = eta_value;
  rec["witness"]["partition"] = partition_json(partition);
  Signing witness = signing_from_partition(g, partition);
  rec["witness"]["signing"] = signing_to_string(witness);
  rec["formula"] = total(witness);
  rec["timings_ms"]["total"] = ms_since(t0);
  return result;
}

RecordResult partition_record(const Graph& g, const ReportOptions& opt) {
  return eta_record(g, opt);
}

RecordResult improve_record(const Graph& g, const ReportOptions& opt) {
  auto t0 = Clock::now();
  RecordResult result;
  result.record = base_record(g);
  json& rec = result.record;

  std::mt19937_64 rng(opt.seed);
  if (opt.improve_runs <= 1) {
    Signing start = opt.improve_all_minus ? all_minus_signing(g) : random_n_submatching(g, rng);
    auto state = switching_improver(g, start);
    rec["witness"]["start"] = signing_to_string(start);
    rec["witness"]["signing"] = signing_to_string(state.signing);
    rec["witness"]["moves"] = moves_json(state.log);
    rec["formula"] = state.potential.first;
    rec["verdicts"]["final_potential"] = {state.potential.first, state.potential.second};
    rec["verdicts"]["valid"] = is_n_submatching(g, state.signing);
  } else {
    auto probe = improver_optimality_probe(g, opt.improve_runs, opt.seed, opt.cap_bruteforce);
    json runs = json::array();
    for (const auto& run : probe.runs)
      runs.push_back({{"start_total", run.start_total},
                      {"final_total", run.final_total},
                      {"moves", run.moves}});
    rec["witness"]["runs"] = runs;
    rec["formula"] = probe.max_total;
    rec["verdicts"]["max_total"] = probe.max_total;
    if (probe.oracle_beta_n) {
      rec["beta"] = json::array();
      rec["verdicts"]["oracle_beta_n"] = *probe.oracle_beta_n;
      rec["verdicts"]["reached_oracle"] = probe.max_total == *probe.oracle_beta_n;
    }
  }
  rec["timings_ms"]["total"] = ms_since(t0);
  return result;
}

json summary_json(const StreamSummary& summary) {
  return json{{"graphs", summary.graphs},
              {"verdicts_failed", summary.verdicts_failed},
              {"skipped", summary.skipped},
              {"caps_hit", summary.caps_hit}};
}

json run_report(const json& input_descriptor, const std::vector<json>& records,
                const StreamSummary& summary) {
  json out;
  out["tool_version"] = kToolVersion;
  out["input"] = input_descriptor;
  out["records"] = records;
  out["summary"] = summary_json(summary);
  return out;
}

int exit_code_for(const StreamSummary& summary) { return summary.verdicts_failed > 0 ? 1 : 0; }

json without_timings(json value) {
  if (value.is_object()) {
    value.erase("timings_ms");
    for (auto& [key, child] : value.items()) child = without_timings(child);
  } else if (value.is_array()) {
    for (auto& child : value) child = without_timings(child);
  }
  return value;
}

}  // namespace submatch
