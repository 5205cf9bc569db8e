// Batch experiment driver over the searchlab C API: instance generation,
// domination verification, X-Y benchmark. Reports are deterministic per
// (seed, config) except wall-clock columns (*_ms).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "searchlab/searchlab.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

const std::map<std::string, sl_preset> kPresets = {
    {"BASE-CHECKRA-RA", SL_PRESET_BASE_CHECKRA_RA},
    {"BASE-RA-ZERO", SL_PRESET_BASE_RA_ZERO},
    {"BASE-ZERO", SL_PRESET_BASE_ZERO},
    {"BASE-XY-MD", SL_PRESET_BASE_XY_MD},
    {"BASE-MD", SL_PRESET_BASE_MD},
};

const std::map<std::string, sl_tie> kTies = {
    {"fifo", SL_TIE_FIFO},       {"lifo", SL_TIE_LIFO},
    {"high-g", SL_TIE_HIGH_G},   {"low-h", SL_TIE_LOW_H},
    {"goal-first", SL_TIE_GOAL_FIRST},
};

std::vector<std::string> keys_of(const auto& map) {
  std::vector<std::string> keys;
  for (const auto& [key, value] : map) keys.push_back(key);
  return keys;
}

struct Config {
  std::uint64_t seed = 1;
  int count = 10;
  int walk = 20;
  int min_depth = 0;
  std::string chain = "BASE-CHECKRA-RA";
  std::string tie = "fifo";
  bool cache = false;
  std::string format = "json";
  std::uint64_t budget = 0;
  std::string out;
  int jobs = 1;
  std::string instances_path;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? values[n / 2]
                    : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// Writes to --out or stdout; returns false (with a message) when unwritable.
bool emit(const Config& config, const std::string& content) {
  if (config.out.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write " << config.out << "\n";
    return false;
  }
  file << content;
  return file.good();
}

struct Instance {
  std::array<int, 9> cells;
  std::string text;
  int depth = 0;  // recomputed on load, never read from the file
};

std::optional<std::vector<Instance>> load_instances(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    usage_error("cannot read " + path);
    return std::nullopt;
  }
  std::vector<Instance> instances;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Instance inst;
    if (sl_parse_state(line.c_str(), inst.cells.data()) != SL_OK) {
      usage_error(path + ":" + std::to_string(line_number) + ": " +
                  sl_last_error());
      return std::nullopt;
    }
    if (sl_exact_depth(inst.cells.data(), &inst.depth) != SL_OK) {
      usage_error(path + ":" + std::to_string(line_number) + ": " +
                  sl_last_error());
      return std::nullopt;
    }
    char buffer[32];
    sl_format_state(inst.cells.data(), buffer, sizeof(buffer));
    inst.text = buffer;
    instances.push_back(inst);
  }
  return instances;
}

// Runs fn(i) for i in [0, n) on `jobs` workers; results land by index.
template <typename Fn>
void for_each_instance(size_t n, int jobs, Fn&& fn) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  if (jobs == 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  const size_t worker_count = std::min<size_t>(static_cast<size_t>(jobs), n);
  workers.reserve(worker_count);
  for (size_t w = 0; w < worker_count; ++w) {
    workers.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : workers) t.join();
}

int cmd_gen(const Config& config) {
  if (config.count < 1) return usage_error("--count must be at least 1");
  if (config.min_depth < 0) return usage_error("--min-depth must be >= 0");
  if (config.walk < 0) return usage_error("--walk must be >= 0");
  if (config.min_depth > config.walk) {
    return usage_error("--min-depth cannot exceed --walk (depth <= walk)");
  }
  std::ostringstream content;
  content << "# seed=" << config.seed << " count=" << config.count
          << " walk=" << config.walk << " min-depth=" << config.min_depth
          << "\n";
  std::set<std::string> seen;
  const std::uint64_t attempt_cap =
      100000 + 5000 * static_cast<std::uint64_t>(config.count);
  int emitted = 0;
  for (std::uint64_t attempt = 0; emitted < config.count; ++attempt) {
    if (attempt >= attempt_cap) {
      return usage_error(
          "could not generate enough distinct instances; raise --walk or "
          "lower --min-depth");
    }
    int cells[9];
    int depth = 0;
    if (sl_scramble(config.seed + attempt, config.walk, cells, &depth) !=
        SL_OK) {
      return usage_error(sl_last_error());
    }
    if (depth < config.min_depth) continue;
    char buffer[32];
    sl_format_state(cells, buffer, sizeof(buffer));
    if (!seen.insert(buffer).second) continue;
    content << buffer << "\n";
    ++emitted;
  }
  return emit(config, content.str()) ? kExitOk : kExitUsage;
}

struct VerifyRow {
  sl_domination_report report{};
  sl_status status = SL_OK;
  std::string error;
};

int cmd_verify(const Config& config) {
  const sl_preset preset = kPresets.at(config.chain);
  const sl_tie tie = kTies.at(config.tie);
  sl_lab* lab = nullptr;
  if (sl_lab_create(preset, &lab) != SL_OK) {
    return usage_error("--chain " + config.chain + ": " + sl_last_error());
  }
  const auto instances = load_instances(config.instances_path);
  if (!instances) {
    sl_lab_destroy(lab);
    return kExitUsage;
  }

  std::vector<VerifyRow> rows(instances->size());
  for_each_instance(
      instances->size(), config.jobs, [&](size_t i) {
        VerifyRow& row = rows[i];
        row.status = sl_lab_verify(lab, (*instances)[i].cells.data(), tie,
                                   config.cache ? 1 : 0, config.budget,
                                   &row.report);
        if (row.status != SL_OK) row.error = sl_last_error();
      });
  sl_lab_destroy(lab);

  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].status == SL_LIMIT_EXCEEDED) {
      std::cerr << "error: instance " << i << ": expansion budget exceeded\n";
      return kExitBudget;
    }
    if (rows[i].status != SL_OK) {
      return usage_error("instance " + std::to_string(i) + ": " +
                         rows[i].error);
    }
  }

  int thm1_violations = 0;
  int thm2_violations = 0;
  std::vector<double> ratios;
  for (const VerifyRow& row : rows) {
    if (row.report.theorem1_holds == 0) ++thm1_violations;
    if (row.report.theorem2_holds == 0) ++thm2_violations;
    ratios.push_back(row.report.ratio);
  }
  const double median_ratio = median(std::move(ratios));

  std::string content;
  if (config.format == "csv") {
    std::ostringstream out;
    out << "schema_version,instance_index,depth,cstar,direct_surely,"
           "direct_possibly,hier_surely,hier_possibly,thm1,thm2,direct_total,"
           "hier_total,ratio\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const sl_domination_report& r = rows[i].report;
      out << kSchemaVersion << ',' << i << ',' << (*instances)[i].depth << ','
          << r.cstar << ',' << r.direct_surely << ',' << r.direct_possibly
          << ',' << r.hier_surely << ',' << r.hier_possibly << ','
          << r.theorem1_holds << ',' << r.theorem2_holds << ','
          << r.direct_total << ',' << r.hier_total << ','
          << fixed(r.ratio, 6) << "\n";
    }
    out << "# summary instances=" << rows.size()
        << " thm1_violations=" << thm1_violations
        << " thm2_violations=" << thm2_violations
        << " median_ratio=" << fixed(median_ratio, 6) << "\n";
    content = out.str();
  } else {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["chain"] = config.chain;
    doc["tie"] = config.tie;
    doc["cache"] = config.cache;
    doc["budget"] = config.budget;
    doc["rows"] = ordered_json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      const sl_domination_report& r = rows[i].report;
      ordered_json row;
      row["instance_index"] = i;
      row["instance"] = (*instances)[i].text;
      row["depth"] = (*instances)[i].depth;
      row["cstar"] = r.cstar;
      row["direct_surely"] = r.direct_surely;
      row["direct_possibly"] = r.direct_possibly;
      row["hier_surely"] = r.hier_surely;
      row["hier_possibly"] = r.hier_possibly;
      row["thm1"] = r.theorem1_holds != 0;
      row["thm2"] = r.theorem2_holds != 0;
      row["direct_total"] = r.direct_total;
      row["hier_total"] = r.hier_total;
      row["ratio"] = r.ratio;
      doc["rows"].push_back(std::move(row));
    }
    doc["summary"] = {{"instances", rows.size()},
                      {"thm1_violations", thm1_violations},
                      {"thm2_violations", thm2_violations},
                      {"median_ratio", median_ratio}};
    content = doc.dump(2) + "\n";
  }
  if (!emit(config, content)) return kExitUsage;
  return thm1_violations + thm2_violations > 0 ? kExitViolation : kExitOk;
}

struct BenchRow {
  sl_xy_row row{};
  sl_status status = SL_OK;
  std::string error;
};

int cmd_bench_xy(const Config& config) {
  const sl_preset preset = kPresets.at(config.chain);
  if (preset != SL_PRESET_BASE_XY_MD) {
    return usage_error("bench-xy requires --chain BASE-XY-MD");
  }
  const sl_tie tie = kTies.at(config.tie);
  sl_lab* lab = nullptr;
  if (sl_lab_create(preset, &lab) != SL_OK) {
    return usage_error("--chain " + config.chain + ": " + sl_last_error());
  }
  const auto instances = load_instances(config.instances_path);
  if (!instances) {
    sl_lab_destroy(lab);
    return kExitUsage;
  }

  std::vector<BenchRow> rows(instances->size());
  for_each_instance(instances->size(), config.jobs, [&](size_t i) {
    BenchRow& row = rows[i];
    row.status = sl_lab_bench_xy(lab, (*instances)[i].cells.data(), tie,
                                 config.budget, &row.row);
    if (row.status != SL_OK) row.error = sl_last_error();
  });
  sl_lab_destroy(lab);

  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].status == SL_LIMIT_EXCEEDED) {
      std::cerr << "error: instance " << i << ": expansion budget exceeded\n";
      return kExitBudget;
    }
    if (rows[i].status != SL_OK) {
      return usage_error("instance " + std::to_string(i) + ": " +
                         rows[i].error);
    }
  }

  const std::string note =
      "factored secondary search is a speedup transformation outside the "
      "scope of the large-domination theorems";
  std::vector<double> ratios;
  for (const BenchRow& row : rows) ratios.push_back(row.row.ratio);
  const double median_ratio = median(std::move(ratios));

  std::string content;
  if (config.format == "csv") {
    std::ostringstream out;
    out << "schema_version,instance_index,depth,md_base,md_total,xy_base,"
           "xy_secondary,xy_total,ratio,md_ms,xy_ms\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const sl_xy_row& r = rows[i].row;
      out << kSchemaVersion << ',' << i << ',' << r.depth << ',' << r.md_base
          << ',' << r.md_total << ',' << r.xy_base << ',' << r.xy_secondary
          << ',' << r.xy_total << ',' << fixed(r.ratio, 6) << ','
          << fixed(r.md_ms, 3) << ',' << fixed(r.xy_ms, 3) << "\n";
    }
    out << "# note " << note << "\n";
    out << "# summary instances=" << rows.size()
        << " median_ratio=" << fixed(median_ratio, 6) << "\n";
    content = out.str();
  } else {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "bench-xy";
    doc["chain"] = config.chain;
    doc["tie"] = config.tie;
    doc["budget"] = config.budget;
    doc["note"] = note;
    doc["rows"] = ordered_json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      const sl_xy_row& r = rows[i].row;
      ordered_json row;
      row["instance_index"] = i;
      row["instance"] = (*instances)[i].text;
      row["depth"] = r.depth;
      row["md_base"] = r.md_base;
      row["md_total"] = r.md_total;
      row["xy_base"] = r.xy_base;
      row["xy_secondary"] = r.xy_secondary;
      row["xy_total"] = r.xy_total;
      row["ratio"] = r.ratio;
      row["md_ms"] = r.md_ms;
      row["xy_ms"] = r.xy_ms;
      doc["rows"].push_back(std::move(row));
    }
    doc["summary"] = {{"instances", rows.size()},
                      {"median_ratio", median_ratio}};
    content = doc.dump(2) + "\n";
  }
  if (!emit(config, content)) return kExitUsage;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config config;
  CLI::App app{"state-space search laboratory driver"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate seeded instances");
  gen->add_option("--seed", config.seed, "generator seed")
      ->capture_default_str();
  gen->add_option("--count", config.count, "instances to emit")
      ->capture_default_str();
  gen->add_option("--walk", config.walk, "random-walk length")
      ->capture_default_str();
  gen->add_option("--min-depth", config.min_depth,
                  "minimum exact solution depth")
      ->capture_default_str();
  gen->add_option("--out", config.out, "output file (default stdout)");

  const auto add_run_options = [&](CLI::App* cmd, const char* default_chain) {
    cmd->add_option("instances", config.instances_path, "instance file")
        ->required();
    cmd->add_option("--chain", config.chain,
                    std::string("hierarchy preset (default ") + default_chain +
                        ")")
        ->transform(CLI::IsMember(keys_of(kPresets), CLI::ignore_case));
    cmd->add_option("--tie", config.tie, "tie-break rule")
        ->transform(CLI::IsMember(keys_of(kTies), CLI::ignore_case))
        ->capture_default_str();
    cmd->add_flag("--cache", config.cache,
                  "memoize heuristic values (deviates from per-call "
                  "accounting)");
    cmd->add_option("--format", config.format, "report format")
        ->transform(CLI::IsMember({"json", "csv"}, CLI::ignore_case))
        ->capture_default_str();
    cmd->add_option("--budget", config.budget,
                    "per-search expansion budget (0 = unlimited)")
        ->capture_default_str();
    cmd->add_option("--out", config.out, "output file (default stdout)");
    cmd->add_option("--jobs", config.jobs,
                    "worker threads (0 = hardware concurrency)")
        ->capture_default_str();
  };

  CLI::App* verify =
      app.add_subcommand("verify", "check domination theorems per instance");
  add_run_options(verify, "BASE-CHECKRA-RA");

  CLI::App* bench =
      app.add_subcommand("bench-xy", "compare MD-direct with XY-hierarchical");
  add_run_options(bench, "BASE-XY-MD");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) return cmd_gen(config);
  if (verify->parsed()) {
    if (verify->count("--chain") == 0) config.chain = "BASE-CHECKRA-RA";
    return cmd_verify(config);
  }
  if (bench->parsed()) {
    if (bench->count("--chain") == 0) config.chain = "BASE-XY-MD";
    return cmd_bench_xy(config);
  }
  return usage_error("no command");
}
