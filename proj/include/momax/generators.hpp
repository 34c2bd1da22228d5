#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momax/graph.hpp"

namespace momax {

enum class GraphFamily { kER, kBA, kKronecker };

struct GeneratorSpec {
  GraphFamily family = GraphFamily::kER;
  int n = 64;
  double er_p = 0.1;
  int ba_d = 5;
  // Kronecker: square initiator (row-major) raised to `power`;
  // n = dim^power.
  std::vector<double> initiator = {0.9, 0.5, 0.5, 0.1};
  int initiator_dim = 2;
  int kron_power = 6;

  void validate() const;  // throws ConfigError
  Graph generate(std::uint64_t seed) const;
  std::string describe() const;
};

// Erdős–Rényi: each unordered pair independently with probability p.
Graph gen_er(int n, double p, Rng& rng);

// Barabási–Albert: complete core on d+1 nodes, then each new node attaches
// to d distinct existing nodes, degree-proportionally without replacement.
Graph gen_ba(int n, int d, Rng& rng);

// Stochastic Kronecker: pair {i, j}, i < j, kept with probability
// Π_t initiator[digit_t(i)][digit_t(j)] in base dim; self-loops dropped.
Graph gen_kronecker(const std::vector<double>& initiator, int dim, int power,
                    Rng& rng);

// Per-color schedules for the harder instances: ER p_c = 0.1 + c/50 and
// BA d_c = round(5 + c/2) (half up), colors numbered 1..k.
std::vector<GeneratorSpec> gen_hard_schedule(GraphFamily family, int k,
                                             const GeneratorSpec& base);

// k graphs from per-color seeds derived from one master seed; `hard`
// switches to the per-color schedule of the same family.
std::vector<Graph> gen_cover_graphs(const GeneratorSpec& spec, int k,
                                    bool hard, std::uint64_t master_seed);

}  // namespace momax
