#pragma once

#include <memory>
#include <string>
#include <vector>

#include "momax/core.hpp"
#include "momax/graph.hpp"

namespace momax {

// ---------------------------------------------------------------------------
// Multi-graph coverage: f_c(U) = number of edges of G_c incident to U.
// ---------------------------------------------------------------------------

struct CoverInstance {
  std::vector<Graph> graphs;  // one undirected graph per color, shared n
};

// Direct edge count of G_c incident to U (reference computation, no
// evaluation accounting).
double cover_value(const CoverInstance& inst, int c, const ElementSet& u);

MultiObjectiveInstance make_cover_instance(CoverInstance inst,
                                           std::string name = "cover");

// ---------------------------------------------------------------------------
// Fair harmonic centrality of a fixed target under edge insertions
// F x {target}. The oracle universe is the candidate list: nodes u with
// (u, target) not already an arc and u != target.
// ---------------------------------------------------------------------------

struct CentralityInstance {
  Graph graph;  // directed
  std::vector<int> color_of;
  int num_colors = 0;
  int target = 0;
  std::vector<int> candidates;       // universe index -> node
  std::vector<int> base_dist;        // d(w, target), -1 if unreachable
  std::vector<int> color_count;      // |V_c \ {target}|
  std::vector<double> empty_values;  // per-color value at F = ∅

  // Full per-candidate distance vectors d(w, u); empty in on-demand mode,
  // where evaluations run a reverse BFS per candidate instead.
  std::vector<std::vector<int>> cand_dist;
  bool on_demand = false;

  std::vector<int> candidate_distances(int candidate_index) const;
};

// Distance vectors are precomputed unless n * |candidates| exceeds
// memory_budget_entries, in which case evaluations fall back to on-demand
// BFS (same values, bounded memory).
std::shared_ptr<const CentralityInstance> build_centrality_instance(
    const Graph& graph, const std::vector<int>& color_of, int target,
    std::size_t memory_budget_entries = 200'000'000);

// (1/|V_c \ {v}|) Σ_{w in V_c \ {v}} 1 / d_new(w) with
// d_new(w) = min(base_dist(w), min_{u in F} d(w, u) + 1); 1/unreachable = 0.
// F holds candidate indices.
double fair_harmonic_value(const CentralityInstance& inst, int c,
                           const ElementSet& f);

// Lowest-index node whose total degree equals the lower median of the
// degree multiset.
int pick_median_degree_target(const Graph& graph);

MultiObjectiveInstance make_centrality_instance(
    std::shared_ptr<const CentralityInstance> inst,
    std::string name = "centrality");

// ---------------------------------------------------------------------------
// Fair influence maximization under independent cascade, evaluated on m
// fixed live-edge samples: f_c(S) = (1/(m |V_c|)) Σ_s |reach_s(S) ∩ V_c|.
// ---------------------------------------------------------------------------

struct CascadeModel {
  int n = 0;
  int num_colors = 0;
  int m_samples = 0;
  std::uint64_t seed = 0;
  std::vector<int> color_of;
  std::vector<int> color_count;
  // Per-sample forward adjacency over kept arcs, CSR layout.
  std::vector<std::vector<int>> sample_head;  // per sample: size n+1
  std::vector<std::vector<int>> sample_arcs;
};

// Arcs of a directed graph are sampled as-is; each undirected edge
// contributes two independently sampled arcs. `arc_prob` overrides the
// scalar probability per arc (key = u * n + v).
std::shared_ptr<const CascadeModel> build_cascade_model(
    const Graph& graph, const std::vector<int>& color_of, double edge_prob,
    int m_samples, std::uint64_t seed,
    const std::unordered_map<std::uint64_t, double>* arc_prob = nullptr);

double influence_value(const CascadeModel& model, int c, const ElementSet& s);

MultiObjectiveInstance make_influence_instance(
    std::shared_ptr<const CascadeModel> model, std::string name = "influence");

}  // namespace momax
