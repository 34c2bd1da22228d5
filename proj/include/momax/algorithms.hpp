#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momax/core.hpp"
#include "momax/lp.hpp"

namespace momax {

enum class LPBackend { kExactLazyResolve, kMWU };

struct LPGreedyConfig {
  int budget = 1;
  int repetitions = 20;  // experiment default
  double phi = 10.0;     // experiment default; phi = 1 recovers the plain LP
  LPBackend backend = LPBackend::kExactLazyResolve;
  double epsilon = 0.1;  // MWU backend accuracy
  std::uint64_t seed = 0;
  int workers = 1;

  // r = max(ceil(log(2 / delta)), 1)
  static int repetitions_for_delta(double delta);
};

struct RunResult {
  std::vector<int> solution;  // insertion order
  std::vector<double> per_color_values;
  double objective = 0.0;  // min over colors
  int argmin_color = 0;
  std::uint64_t oracle_calls = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string instance;
};

// LP Greedy with independent repetitions. Each repetition builds S over B
// steps by solving LP(S) (exactly with lazy re-solves, or approximately via
// MWU) and sampling one new element from the solution; the repetition with
// the best min-color value wins (ties to the later repetition).
RunResult lp_greedy(const MultiObjectiveInstance& instance,
                    const LPGreedyConfig& cfg, const Deadline& deadline = {});

struct PreprocessResult {
  ElementSet t;
  std::vector<std::vector<int>> per_color_added;  // per color, in pick order
  // Colors carried into the main phase. Without knowledge of the optimum
  // no color can be ruled out, so all colors survive.
  std::vector<int> surviving_colors;
};

// Per-color greedy pre-processing: for each color in index order, add the
// per_color_budget elements of highest marginal gain onto the shared set T.
PreprocessResult preprocess(const MultiObjectiveInstance& instance,
                            int per_color_budget);

struct PipelineConfig {
  int budget = 1;
  double epsilon = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 0;
  LPBackend backend = LPBackend::kExactLazyResolve;
  double phi = 1.0;
  int workers = 1;
};

// Full pipeline: pre-processing with per-color budget B' = ceil(1/gamma),
// gamma = eps^2 / (36 log k), then LP Greedy with the reduced budget
// B - |T| on the shifted objectives A -> f_c(A ∪ T). Reported values are
// under the original objectives.
RunResult lp_greedy_full_pipeline(const MultiObjectiveInstance& instance,
                                  const PipelineConfig& cfg,
                                  const Deadline& deadline = {});

// Adds at step i (1-based) the best element for color i mod k.
RunResult greedy_round_robin(const MultiObjectiveInstance& instance, int budget,
                             const Deadline& deadline = {});

// Adds the best element for the currently worst color.
RunResult greedy_minimum(const MultiObjectiveInstance& instance, int budget,
                         const Deadline& deadline = {});

// Lazy greedy on f(S) = Σ_c min{f_c(S), opt_guess}; stops early once the
// objective saturates at k * opt_guess.
RunResult saturate(const MultiObjectiveInstance& instance, int budget,
                   double opt_guess, const Deadline& deadline = {});

// MWU over colors with a lazy-greedy inner solver for the weighted sum
// Σ_c y_c f_c(S); weights of colors that reached opt_guess are decayed.
// Returns the best iterate under the min-color objective.
RunResult udwani_mwu(const MultiObjectiveInstance& instance, int budget,
                     double opt_guess, int iterations = 100,
                     const Deadline& deadline = {});

enum class SearchedAlgorithm { kSaturate, kUdwaniMWU };

struct BinarySearchResult {
  RunResult best;
  int probes = 0;
};

// Outer binary search for the optimum guess required by saturate and
// udwani_mwu. Brackets [0, hi] with hi = min_c f_c(single-objective greedy
// top-B for c); keeps the best probe by true objective; stops when the
// bracket width drops to rel_tol * hi.
BinarySearchResult binary_search_opt(SearchedAlgorithm algorithm,
                                     const MultiObjectiveInstance& instance,
                                     int budget, double rel_tol,
                                     int udwani_iterations = 100,
                                     const Deadline& deadline = {});

// Accelerated single-objective greedy; returns the same set as naive greedy
// under the lowest-index tie-break, with at most as many evaluations.
ElementSet lazy_greedy_single(const SubmodularOracle& oracle, int budget,
                              const Deadline& deadline = {});

}  // namespace momax
