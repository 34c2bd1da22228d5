#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "momax/algorithms.hpp"
#include "momax/generators.hpp"
#include "momax/objectives.hpp"

namespace momax {

enum class ObjectiveFamily { kCover, kCentrality, kInfluence };

std::string to_string(ObjectiveFamily f);

struct ExperimentConfig {
  // Instance source: synthetic cover graphs, or files.
  ObjectiveFamily objective = ObjectiveFamily::kCover;
  GeneratorSpec gen;
  int k = 20;
  bool hard = false;

  std::vector<std::string> edge_files;  // per-color graphs (cover from files)
  std::string colors_file;
  std::string probs_file;
  bool directed = false;        // centrality graphs are always directed
  std::string target = "median";  // node id or "median"
  double edge_prob = 0.1;
  int samples = 1000;
  std::uint64_t cascade_seed = 12345;

  std::vector<std::string> algorithms = {"lp_greedy"};
  std::vector<int> budgets = {5, 10, 15, 20, 25, 30, 35, 40};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};

  // Algorithm parameters.
  double phi = 10.0;
  int repetitions = 20;
  LPBackend backend = LPBackend::kExactLazyResolve;
  double epsilon = 0.1;
  int udwani_iterations = 100;
  double opt_search_tol = 0.01;

  double time_limit_s = 600.0;
  int workers = 0;  // 0 = hardware
  std::string out = "results.csv";

  void validate() const;  // throws ConfigError
};

// Flat "key = value" file; '#' starts a comment. Unknown keys are errors.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

struct RecordRow {
  std::string instance;
  std::string objective_family;
  std::string algorithm;
  int budget = 0;
  std::uint64_t seed = 0;
  double objective = 0.0;
  int argmin_color = 0;
  std::uint64_t oracle_calls = 0;
  double wall_time_s = 0.0;
  std::string extra;
};

inline constexpr const char* kCsvHeader =
    "instance,objective_family,algorithm,B,seed,objective,argmin_color,"
    "oracle_calls,wall_time_s,extra";

struct ExperimentResult {
  std::vector<RecordRow> rows;  // sorted by (algorithm, B, seed)
  bool any_timeout = false;
};

// Runs every (algorithm, B, seed) cell. Instances are shared across
// algorithms within a seed; rows are appended to cfg.out as they complete
// and the file is rewritten in sorted order at the end. Cells that exceed
// the per-run time limit produce a row with extra = "status=timeout".
ExperimentResult run_experiment(const ExperimentConfig& cfg);

enum class AblationAxis { kRepetitions, kPhi };

// Sweeps repetitions (phi fixed at 10) or phi (repetitions fixed at 20)
// for lp_greedy on the configured instance.
ExperimentResult ablation(const ExperimentConfig& cfg, AblationAxis axis,
                          const std::vector<double>& values);

struct SummaryRow {
  std::string algorithm;
  int budget = 0;
  int runs = 0;
  double objective_mean = 0.0, objective_std = 0.0;
  double oracle_calls_mean = 0.0, oracle_calls_std = 0.0;
  double wall_time_mean = 0.0, wall_time_std = 0.0;
};

// Mean and population standard deviation across seeds per (algorithm, B).
// Timeout rows are skipped.
std::vector<SummaryRow> summarize(const std::vector<RecordRow>& rows);

std::string format_csv(const std::vector<RecordRow>& rows);
void write_csv(const std::vector<RecordRow>& rows, const std::string& path);
std::vector<RecordRow> parse_csv_text(const std::string& body);
std::vector<RecordRow> read_csv(const std::string& path);
void print_summary(const std::vector<SummaryRow>& rows, std::ostream& os);

}  // namespace momax
