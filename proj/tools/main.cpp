// submatch: exact signed k-submatching numbers, trail partitions and bound
// verification on small graphs. See README.md for the report schema.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "submatch/constructive.hpp"
#include "submatch/errors.hpp"
#include "submatch/formats.hpp"
#include "submatch/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace submatch;

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

struct InputItem {
  Graph graph;
  std::string source;
};

Graph generator_input(const std::string& spec) {
  // gen:FAMILY:ARGS, e.g. gen:cycle:5 or gen:random:6:9:17
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() < 3) throw InvalidParameter("generator spec needs gen:FAMILY:N");
  const std::string& family = parts[1];
  auto arg = [&](std::size_t i) { return std::stoi(parts.at(i)); };
  if (family == "path") return path(arg(2));
  if (family == "cycle") return cycle(arg(2));
  if (family == "complete") return complete(arg(2));
  if (family == "star") return star(arg(2));
  if (family == "random") {
    std::uint64_t seed = parts.size() > 4 ? std::stoull(parts[4]) : 1;
    return random_connected(arg(2), arg(3), seed);
  }
  throw InvalidParameter("unknown generator family: " + family);
}

std::vector<InputItem> load_inputs(const std::string& input, const std::string& format) {
  std::vector<InputItem> items;
  auto add_edgelist = [&](const std::string& text, const std::string& source) {
    items.push_back({parse_edge_list(text), source});
  };
  auto add_graph6 = [&](std::istream& in, const std::string& source) {
    auto graphs = parse_graph6_stream(in);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      items.push_back({graphs[i], source + ":" + std::to_string(i + 1)});
  };

  if (input.rfind("gen:", 0) == 0) {
    items.push_back({generator_input(input), input});
    return items;
  }
  if (input == "-") {
    if (format == "graph6") {
      add_graph6(std::cin, "stdin");
    } else {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      add_edgelist(buffer.str(), "stdin");
    }
    return items;
  }
  fs::path p(input);
  if (!fs::exists(p)) throw InvalidParameter("input not found: " + input);
  std::vector<fs::path> files;
  if (fs::is_directory(p)) {
    for (const auto& entry : fs::directory_iterator(p))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(p);
  }
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw InvalidParameter("cannot open " + file.string());
    if (format == "graph6") {
      add_graph6(in, file.string());
    } else {
      std::stringstream buffer;
      buffer << in.rdbuf();
      add_edgelist(buffer.str(), file.string());
    }
  }
  return items;
}

struct CommonFlags {
  std::string input = "-";
  std::string format = "edgelist";
  std::string json_path;
  bool jsonl = false;
  int parallel = 1;
  ReportOptions opt;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("input", flags.input, "file, directory, '-' for stdin, or gen:FAMILY:ARGS");
  cmd->add_option("--format", flags.format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("--json", flags.json_path, "write the full report to this path");
  cmd->add_flag("--jsonl", flags.jsonl, "emit one record per line instead of a single report");
  cmd->add_option("--parallel", flags.parallel, "worker threads for per-graph processing")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap-bruteforce", flags.opt.cap_bruteforce,
                  "max edges for 2^m signing enumeration");
  cmd->add_option("--cap-partitions", flags.opt.cap_partitions,
                  "max edges for complete-partition enumeration");
  cmd->add_option("--seed", flags.opt.seed, "seed for sampling and search");
  cmd->add_flag("--allow-heuristic", flags.opt.allow_heuristic,
                "fall back to search-based values above the brute-force cap");
}

// Applies SUBMATCH_CAP_BRUTEFORCE unless the flag was passed explicitly.
void apply_env_cap(const CLI::App* cmd, CommonFlags& flags) {
  if (cmd->count("--cap-bruteforce") > 0) return;
  if (const char* env = std::getenv("SUBMATCH_CAP_BRUTEFORCE")) {
    try {
      flags.opt.cap_bruteforce = std::stoi(env);
    } catch (...) {
      throw InvalidParameter("SUBMATCH_CAP_BRUTEFORCE is not an integer");
    }
  }
}

int run_stream(const CommonFlags& flags, const json& descriptor,
               const std::function<RecordResult(const Graph&)>& process) {
  auto items = load_inputs(flags.input, flags.format);
  std::vector<RecordResult> results(items.size());
  if (flags.parallel > 1 && items.size() > 1) {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        results[i] = process(items[i].graph);
      }
    };
    std::vector<std::future<void>> pool;
    int threads = std::min<int>(flags.parallel, static_cast<int>(items.size()));
    for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = process(items[i].graph);
  }

  StreamSummary summary;
  std::vector<json> records;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& r = results[i];
    r.record["input"] = items[i].source;
    summary.graphs++;
    if (r.failed) summary.verdicts_failed++;
    if (r.skipped) {
      summary.skipped++;
      std::cerr << "warning: skipped " << items[i].source << ": "
                << r.record["verdicts"].value("skipped", std::string("?")) << "\n";
    }
    if (r.caps_hit) summary.caps_hit++;
    records.push_back(std::move(r.record));
  }

  json report = run_report(descriptor, records, summary);
  if (!flags.json_path.empty()) {
    std::ofstream out(flags.json_path);
    out << report.dump(2) << "\n";
  }
  if (flags.jsonl) {
    for (const auto& rec : records) std::cout << rec.dump() << "\n";
    std::cerr << summary_json(summary).dump() << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return exit_code_for(summary);
}

int generate_main(const std::string& family, int n, int m, std::uint64_t seed, int count,
                  const std::string& format) {
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i) {
    if (family == "path") graphs.push_back(path(n));
    else if (family == "cycle") graphs.push_back(cycle(n));
    else if (family == "complete") graphs.push_back(complete(n));
    else if (family == "star") graphs.push_back(star(n));
    else if (family == "random") graphs.push_back(random_connected(n, m, seed + i));
    else throw InvalidParameter("unknown family: " + family);
  }
  if (format == "graph6") {
    for (const auto& g : graphs) std::cout << encode_graph6(g) << "\n";
  } else {
    if (count > 1)
      throw InvalidParameter("edgelist output supports a single graph; use --format graph6");
    std::cout << serialize_edge_list(graphs.front());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed k-submatching toolkit"};
  app.require_subcommand(1);

  CommonFlags solve_flags, verify_flags, eta_flags, partition_flags, improve_flags;
  std::string bound = "conjecture";

  auto* solve = app.add_subcommand("solve", "compute beta values with witnesses");
  add_common(solve, solve_flags);
  solve->add_option("--k", solve_flags.opt.kspec, "'all', 'n', or an integer in 1..n");

  auto* verify = app.add_subcommand("verify", "check a bound per graph and per k");
  add_common(verify, verify_flags);
  verify->add_option("--bound", bound, "conjecture, connected, split, or formula")
      ->check(CLI::IsMember({"conjecture", "connected", "split", "formula"}));
  verify->add_option("--splits-per-graph", verify_flags.opt.splits_per_graph,
                     "sampled splits per graph for --bound split");

  auto* eta_cmd = app.add_subcommand("eta", "maximum number of odd trails over complete partitions");
  add_common(eta_cmd, eta_flags);

  auto* partition_cmd = app.add_subcommand("partition", "emit a best-found complete partition");
  add_common(partition_cmd, partition_flags);

  auto* improve = app.add_subcommand("improve", "run the switching improver");
  add_common(improve, improve_flags);
  improve->add_option("--runs", improve_flags.opt.improve_runs,
                      "number of seeded starts (>1 reports a probe summary)");
  improve->add_flag("--all-minus", improve_flags.opt.improve_all_minus,
                    "start from the all-minus signing instead of a random one");

  std::string gen_family = "random";
  int gen_n = 5, gen_m = 5, gen_count = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_format = "edgelist";
  auto* generate = app.add_subcommand("generate", "emit generated graphs");
  generate->add_option("--family", gen_family, "path, cycle, complete, star, or random");
  generate->add_option("--n", gen_n, "vertex count");
  generate->add_option("--m", gen_m, "edge count (random family)");
  generate->add_option("--seed", gen_seed, "seed (random family)");
  generate->add_option("--count", gen_count, "number of graphs (graph6 output)");
  generate->add_option("--format", gen_format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      apply_env_cap(solve, solve_flags);
      const auto& ks = solve_flags.opt.kspec;
      if (ks != "all" && ks != "n") {
        try {
          (void)std::stoi(ks);
        } catch (...) {
          throw InvalidParameter("--k must be 'all', 'n', or an integer");
        }
      }
      json descriptor{{"command", "solve"},
                      {"input", solve_flags.input},
                      {"format", solve_flags.format},
                      {"k", ks},
                      {"seed", solve_flags.opt.seed},
                      {"cap_bruteforce", solve_flags.opt.cap_bruteforce},
                      {"cap_partitions", solve_flags.opt.cap_partitions}};
      return run_stream(solve_flags, descriptor,
                        [&](const Graph& g) { return solve_record(g, solve_flags.opt); });
    }
    if (verify->parsed()) {
      apply_env_cap(verify, verify_flags);
      BoundKind kind = bound_kind_from_string(bound);
      json descriptor{{"command", "verify"},
                      {"input", verify_flags.input},
                      {"format", verify_flags.format},
                      {"bound", bound},
                      {"seed", verify_flags.opt.seed},
                      {"cap_bruteforce", verify_flags.opt.cap_bruteforce},
                      {"cap_partitions", verify_flags.opt.cap_partitions}};
      return run_stream(verify_flags, descriptor,
                        [&](const Graph& g) { return verify_record(g, kind, verify_flags.opt); });
    }
    if (eta_cmd->parsed()) {
      apply_env_cap(eta_cmd, eta_flags);
      json descriptor{{"command", "eta"},
                      {"input", eta_flags.input},
                      {"format", eta_flags.format},
                      {"seed", eta_flags.opt.seed}};
      return run_stream(eta_flags, descriptor,
                        [&](const Graph& g) { return eta_record(g, eta_flags.opt); });
    }
    if (partition_cmd->parsed()) {
      apply_env_cap(partition_cmd, partition_flags);
      json descriptor{{"command", "partition"},
                      {"input", partition_flags.input},
                      {"format", partition_flags.format},
                      {"seed", partition_flags.opt.seed}};
      return run_stream(partition_flags, descriptor,
                        [&](const Graph& g) { return partition_record(g, partition_flags.opt); });
    }
    if (improve->parsed()) {
      apply_env_cap(improve, improve_flags);
      json descriptor{{"command", "improve"},
                      {"input", improve_flags.input},
                      {"format", improve_flags.format},
                      {"seed", improve_flags.opt.seed},
                      {"runs", improve_flags.opt.improve_runs},
                      {"all_minus", improve_flags.opt.improve_all_minus}};
      return run_stream(improve_flags, descriptor,
                        [&](const Graph& g) { return improve_record(g, improve_flags.opt); });
    }
    if (generate->parsed())
      return generate_main(gen_family, gen_n, gen_m, gen_seed, gen_count, gen_format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SimplicityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << " (pass --allow-heuristic or raise the cap)\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
