#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "submatch/constructive.hpp"
#include "submatch/graph.hpp"
#include "submatch/oracle.hpp"

namespace submatch {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
  int cap_bruteforce = kDefaultBruteforceCap;
  int cap_partitions = kDefaultPartitionCap;
  bool allow_heuristic = false;
  std::uint64_t seed = 1;
  std::string kspec = "all";  // "all", "n", or an integer
  int splits_per_graph = 3;
  int improve_runs = 1;
  bool improve_all_minus = false;
  EtaSearchOptions eta;
};

enum class BoundKind { Conjecture, Connected, Split, Formula };

BoundKind bound_kind_from_string(const std::string& name);

// One per-graph record. Field names are fixed:
// {"graph","n","m","omega","beta","eta","formula","verdicts","witness","timings_ms"}.
struct RecordResult {
  nlohmann::json record;
  bool failed = false;
  bool skipped = false;
  bool caps_hit = false;
};

RecordResult solve_record(const Graph& g, const ReportOptions& opt);
RecordResult verify_record(const Graph& g, BoundKind kind, const ReportOptions& opt);
RecordResult eta_record(const Graph& g, const ReportOptions& opt);
RecordResult partition_record(const Graph& g, const ReportOptions& opt);
RecordResult improve_record(const Graph& g, const ReportOptions& opt);

nlohmann::json beta_table_json(const BetaTable& table);

struct StreamSummary {
  int graphs = 0;
  int verdicts_failed = 0;
  int skipped = 0;
  int caps_hit = 0;
};

nlohmann::json summary_json(const StreamSummary& summary);

nlohmann::json run_report(const nlohmann::json& input_descriptor,
                          const std::vector<nlohmann::json>& records,
                          const StreamSummary& summary);

// 0 when everything verified, 1 on verification failures.
int exit_code_for(const StreamSummary& summary);

// Strips the (nondeterministic) timing fields; used by determinism checks.
nlohmann::json without_timings(nlohmann::json value);

}  // namespace submatch
