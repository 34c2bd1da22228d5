#pragma once

#include <functional>
#include <vector>

#include "momax/core.hpp"

namespace momax {

// Column data of the per-iteration LP for a fixed partial solution S:
// payoff[c][v] = B * f_c(v | S) + phi * f_c(S). Elements of S are excluded
// from the feasible support (their mass is forced to zero).
struct IterationLP {
  int k = 0;
  int n = 0;
  int budget = 0;
  double phi = 1.0;
  std::vector<double> payoff;   // row-major k x n
  std::vector<char> excluded;   // size n; nonzero marks forbidden columns

  double at(int c, int v) const { return payoff[static_cast<std::size_t>(c) * n + v]; }
  double& at(int c, int v) { return payoff[static_cast<std::size_t>(c) * n + v]; }
};

struct LPSolution {
  ElementDistribution x;
  double xi = 0.0;
  ColorWeights dual;  // optimal weights of the minimizing color player
};

// Evaluates all k*n payoff entries eagerly (k*n marginals plus k base
// values through the supplied cursors).
IterationLP build_iteration_lp(const MultiObjectiveInstance& instance,
                               const ElementSet& s, int budget, double phi);

// Exact optimum of max_{x in Δ_V} min_c Σ_v x_v payoff[c][v] via dense
// simplex over the k+1 constraints. Returns a vertex solution (support
// size <= k) together with the dual color weights.
LPSolution solve_exact(const IterationLP& lp);

// Upper bounds g_c(v) >= f_c(v | S) with per-entry freshness flags.
// Bounds seeded from marginals at an earlier (smaller) S stay valid as S
// grows, by submodularity; freshness must be cleared on growth.
class LazyBounds {
 public:
  LazyBounds() = default;
  LazyBounds(int k, int n, double init = 0.0);
  static LazyBounds seeded(std::vector<double> empty_marginals, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  double bound(int c, int v) const { return g_[idx(c, v)]; }
  bool fresh(int c, int v) const { return fresh_[idx(c, v)] != 0; }
  bool fresh_all(int v) const;
  void set_fresh(int c, int v, double marginal) {
    g_[idx(c, v)] = marginal;
    fresh_[idx(c, v)] = 1;
  }
  // Keep bounds, drop freshness (call when S grows).
  void invalidate();
  // Σ_c y_c g_c(v)
  double score(const ColorWeights& y, int v) const;

 private:
  std::size_t idx(int c, int v) const {
    return static_cast<std::size_t>(c) * n_ + v;
  }
  int k_ = 0, n_ = 0;
  std::vector<double> g_;
  std::vector<char> fresh_;
};

// Lazy access to the payoff columns of LP(S): cached per-color base values
// f_c(S) plus a marginal evaluator that charges one oracle evaluation per
// (c, v) query.
struct PayoffOracle {
  int k = 0;
  int n = 0;
  int budget = 0;
  double phi = 1.0;
  std::vector<double> base;  // f_c(S)
  std::function<double(int c, int v)> marginal;
  const std::vector<char>* excluded = nullptr;  // optional in-S mask

  bool is_excluded(int v) const { return excluded && (*excluded)[v] != 0; }
  double payoff(int c, int v, double gain) const {
    return budget * gain + phi * base[c];
  }
};

struct MWUConfig {
  int iterations = 1;      // T >= 1
  double eta = 0.1;        // step size on scaled losses, in (0, 1)
  double loss_scale = 1.;  // maps payoffs into [0, 1]
};

// Parameters from the analysis: T = ceil(16 B^2 ln(k) / eps^2) (at least 1),
// losses scaled by (1 + phi) * B * M so they lie in [0, 1], and the
// correspondingly scaled step eta = eps * (1 + phi) / (8 B). M is the
// maximum empty-set marginal gain.
MWUConfig mwu_config(int k, int budget, double phi, double epsilon,
                     double max_empty_gain);

// Best response to color weights y: the non-excluded element maximizing
// Σ_c y_c f_c(v | S) exactly, evaluating only elements whose bound score
// reached the best fresh score. Ties go to the lowest element index.
// Refreshed entries are recorded in `bounds`.
int lazy_best_response(const ColorWeights& y, LazyBounds& bounds,
                       const PayoffOracle& payoffs);

// Approximate LP solve as a two-player zero-sum game: T rounds of
// multiplicative weight updates over colors against lazy best responses.
// Returns the uniform average of the T best-response indicators; bounds are
// tightened in place. Throws ConfigError if a weight is driven below zero.
ElementDistribution solve_mwu(const PayoffOracle& payoffs, LazyBounds& bounds,
                              const MWUConfig& cfg);

// Exact solve over lazily evaluated payoffs: solves the LP on the current
// upper bounds, refreshes every supported stale column, and repeats until
// the support is entirely fresh. The result equals solve_exact on fully
// evaluated payoffs.
LPSolution solve_lazy_resolve(const PayoffOracle& payoffs, LazyBounds& bounds);

// Convenience wrapper building cursors for S on the instance's oracles.
LPSolution solve_lazy_resolve(const MultiObjectiveInstance& instance,
                              const ElementSet& s, int budget, double phi,
                              LazyBounds& bounds);

// Game value of x against the true payoff matrix: min_c Σ_v x_v payoff[c][v].
double game_value(const IterationLP& lp, const ElementDistribution& x);

}  // namespace momax
