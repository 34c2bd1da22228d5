#include "momax/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace momax {

namespace {

constexpr double kPivotTol = 1e-10;

// Dense full-tableau two-phase simplex for
//   min c^T z  s.t.  A z = b, z >= 0,  b >= 0,
// sized for few rows and many columns. Bland's rule keeps pivoting
// deterministic and cycle-free. Row m is the phase-2 cost row, row m+1 the
// phase-1 cost row; artificial columns live at [cols, cols+m).
class DenseSimplex {
 public:
  DenseSimplex(std::vector<double> a, std::vector<double> b,
               std::vector<double> c, int m, int cols)
      : m_(m), cols_(cols), width_(cols + m + 1), basis_(m) {
    t_.assign(static_cast<std::size_t>(m_ + 2) * width_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < cols_; ++j) at(i, j) = a[static_cast<std::size_t>(i) * cols_ + j];
      at(i, cols_ + i) = 1.0;
      at(i, width_ - 1) = b[i];
      basis_[i] = cols_ + i;
    }
    // Phase-2 reduced costs: basis is artificial with zero phase-2 cost.
    for (int j = 0; j < cols_; ++j) at(m_, j) = c[j];
    // Phase-1 reduced costs: cost 1 on artificials, basis artificial.
    for (int j = 0; j < cols_; ++j) {
      double s = 0.0;
      for (int i = 0; i < m_; ++i) s += at(i, j);
      at(m_ + 1, j) = -s;
    }
    double rhs = 0.0;
    for (int i = 0; i < m_; ++i) rhs += at(i, width_ - 1);
    at(m_ + 1, width_ - 1) = -rhs;
  }

  void solve() {
    run_phase(m_ + 1);
    if (at(m_ + 1, width_ - 1) < -1e-7) {
      throw SolverError("simplex: phase 1 did not reach feasibility (residual " +
                        std::to_string(-at(m_ + 1, width_ - 1)) + ")");
    }
    drive_out_artificials();
    run_phase(m_);
  }

  std::vector<double> primal() const {
    std::vector<double> z(cols_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < cols_) z[basis_[i]] = std::max(0.0, at(i, width_ - 1));
    }
    return z;
  }

  // y_i = -reduced cost of the i-th artificial column in the phase-2 row.
  std::vector<double> duals() const {
    std::vector<double> y(m_, 0.0);
    for (int i = 0; i < m_; ++i) y[i] = -at(m_, cols_ + i);
    return y;
  }

  double objective() const { return -at(m_, width_ - 1); }
  int pivots() const { return pivots_; }

 private:
  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * width_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * width_ + j]; }

  void pivot(int row, int col) {
    const double p = at(row, col);
    const double inv = 1.0 / p;
    for (int j = 0; j < width_; ++j) at(row, j) *= inv;
    at(row, col) = 1.0;
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    basis_[row] = col;
    ++pivots_;
  }

  void run_phase(int cost_row) {
    const long limit = 2000L + 50L * (m_ + cols_);
    for (long it = 0; it < limit; ++it) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {  // Bland: lowest eligible index
        if (at(cost_row, j) < -kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;  // optimal
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double coef = at(i, enter);
        if (coef <= kPivotTol) continue;
        const double ratio = at(i, width_ - 1) / coef;
        if (leave < 0 || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) {
        throw SolverError("simplex: unbounded direction in column " +
                          std::to_string(enter));
      }
      pivot(leave, enter);
    }
    throw SolverError("simplex: iteration limit exceeded after " +
                      std::to_string(pivots_) + " pivots");
  }

  // Pivot still-basic artificials onto original columns where possible;
  // rows that admit no pivot are redundant and stay inert at level zero.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < cols_) continue;
      for (int j = 0; j < cols_; ++j) {
        if (std::abs(at(i, j)) > 1e-8) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  int m_, cols_, width_;
  std::vector<double> t_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

std::vector<int> active_columns(const IterationLP& lp) {
  std::vector<int> cols;
  cols.reserve(lp.n);
  for (int v = 0; v < lp.n; ++v) {
    if (lp.excluded.empty() || !lp.excluded[v]) cols.push_back(v);
  }
  return cols;
}

LPSolution point_mass_solution(const IterationLP& lp, int element, double xi,
                               int dual_color) {
  std::vector<double> x(lp.n, 0.0);
  x[element] = 1.0;
  std::vector<double> y(lp.k, 0.0);
  y[dual_color] = 1.0;
  return {ElementDistribution(std::move(x)), xi, ColorWeights(std::move(y))};
}

}  // namespace

IterationLP build_iteration_lp(const MultiObjectiveInstance& instance,
                               const ElementSet& s, int budget, double phi) {
  if (phi < 1.0) throw InputError("greediness factor phi must be >= 1");
  if (budget <= 0) throw InputError("budget must be positive");
  const int k = instance.k();
  const int n = instance.n();
  IterationLP lp;
  lp.k = k;
  lp.n = n;
  lp.budget = budget;
  lp.phi = phi;
  lp.payoff.assign(static_cast<std::size_t>(k) * n, 0.0);
  lp.excluded.assign(n, 0);
  for (int v : s.elements()) lp.excluded[v] = 1;
  for (int c = 0; c < k; ++c) {
    auto cur = instance.oracle(c).cursor();
    cur->reset();
    for (int v : s.elements()) cur->add(v);
    const double base = cur->base();
    for (int v = 0; v < n; ++v) {
      const double gain = s.contains(v) ? 0.0 : cur->gain(v);
      lp.at(c, v) = budget * gain + phi * base;
    }
  }
  return lp;
}

LPSolution solve_exact(const IterationLP& lp) {
  if (lp.k < 1 || lp.n < 1) throw InputError("empty LP");
  if (lp.payoff.size() != static_cast<std::size_t>(lp.k) * lp.n) {
    throw InputError("payoff matrix size mismatch");
  }
  const std::vector<int> cols = active_columns(lp);
  if (cols.empty()) throw InputError("no admissible columns");

  double max_entry = 0.0;
  for (int c = 0; c < lp.k; ++c) {
    for (int v : cols) {
      const double p = lp.at(c, v);
      if (p < -1e-9) throw InputError("payoffs must be nonnegative");
      max_entry = std::max(max_entry, p);
    }
  }
  if (max_entry <= 0.0) {
    // Everything is zero; any distribution is optimal.
    return point_mass_solution(lp, cols.front(), 0.0, 0);
  }

  // A color whose payoffs all vanish pins the value at zero. Solve the
  // subgame without such rows for a useful x; the dual rests on the first
  // dead row.
  std::vector<int> rows;
  int dead_row = -1;
  for (int c = 0; c < lp.k; ++c) {
    double row_max = 0.0;
    for (int v : cols) row_max = std::max(row_max, lp.at(c, v));
    if (row_max > 0.0) {
      rows.push_back(c);
    } else if (dead_row < 0) {
      dead_row = c;
    }
  }
  if (dead_row >= 0) {
    IterationLP sub;
    sub.k = static_cast<int>(rows.size());
    sub.n = lp.n;
    sub.budget = lp.budget;
    sub.phi = lp.phi;
    sub.excluded = lp.excluded;
    sub.payoff.resize(static_cast<std::size_t>(sub.k) * sub.n);
    for (int r = 0; r < sub.k; ++r) {
      for (int v = 0; v < lp.n; ++v) sub.at(r, v) = lp.at(rows[r], v);
    }
    LPSolution inner = solve_exact(sub);
    std::vector<double> y(lp.k, 0.0);
    y[dead_row] = 1.0;
    return {inner.x, 0.0, ColorWeights(std::move(y))};
  }

  if (lp.k == 1) {
    int best = cols.front();
    for (int v : cols) {
      if (lp.at(0, v) > lp.at(0, best)) best = v;
    }
    return point_mass_solution(lp, best, lp.at(0, best), 0);
  }

  // Positive game value: normalize by the largest entry and solve the
  // covering form  min Σu  s.t.  P u - s = 1, u, s >= 0, where
  // x = u / Σu and xi = 1 / Σu.
  const int m = lp.k;
  const int nu = static_cast<int>(cols.size());
  const int width = nu + m;
  std::vector<double> a(static_cast<std::size_t>(m) * width, 0.0);
  for (int c = 0; c < m; ++c) {
    for (int j = 0; j < nu; ++j) {
      a[static_cast<std::size_t>(c) * width + j] = lp.at(c, cols[j]) / max_entry;
    }
    a[static_cast<std::size_t>(c) * width + nu + c] = -1.0;  // surplus
  }
  std::vector<double> b(m, 1.0);
  std::vector<double> c_cost(width, 0.0);
  for (int j = 0; j < nu; ++j) c_cost[j] = 1.0;

  DenseSimplex simplex(std::move(a), std::move(b), std::move(c_cost), m, width);
  simplex.solve();

  const std::vector<double> z = simplex.primal();
  double total = 0.0;
  for (int j = 0; j < nu; ++j) total += z[j];
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw SolverError("simplex: degenerate covering solution, sum(u) = " +
                      std::to_string(total) + " after " +
                      std::to_string(simplex.pivots()) + " pivots");
  }
  std::vector<double> x(lp.n, 0.0);
  for (int j = 0; j < nu; ++j) x[cols[j]] = std::max(0.0, z[j] / total);
  const double xi = max_entry / total;

  std::vector<double> y = simplex.duals();
  double ytotal = 0.0;
  for (double& w : y) {
    w = std::max(0.0, w);
    ytotal += w;
  }
  if (ytotal <= 0.0 || std::abs(ytotal - total) > 1e-6 * std::max(1.0, total)) {
    throw SolverError("simplex: dual mismatch, sum(y) = " + std::to_string(ytotal) +
                      " vs sum(u) = " + std::to_string(total));
  }
  for (double& w : y) w /= ytotal;

  LPSolution sol{ElementDistribution::normalized(std::move(x)), xi,
                 ColorWeights::normalized(std::move(y))};

  // Residual diagnostics: the reported value must be attained.
  const double attained = game_value(lp, sol.x);
  if (std::abs(attained - xi) > 1e-7 * std::max(1.0, std::abs(xi))) {
    std::ostringstream oss;
    oss << "simplex: value mismatch, xi = " << xi << " but attained " << attained
        << " (" << simplex.pivots() << " pivots, scale " << max_entry << ")";
    throw SolverError(oss.str());
  }
  return sol;
}

double game_value(const IterationLP& lp, const ElementDistribution& x) {
  double worst = std::numeric_limits<double>::infinity();
  for (int c = 0; c < lp.k; ++c) {
    double row = 0.0;
    for (int v = 0; v < lp.n; ++v) {
      if (x.mass(v) > 0.0) row += x.mass(v) * lp.at(c, v);
    }
    worst = std::min(worst, row);
  }
  return worst;
}

LazyBounds::LazyBounds(int k, int n, double init)
    : k_(k), n_(n), g_(static_cast<std::size_t>(k) * n, init),
      fresh_(static_cast<std::size_t>(k) * n, 0) {}

LazyBounds LazyBounds::seeded(std::vector<double> empty_marginals, int k, int n) {
  if (empty_marginals.size() != static_cast<std::size_t>(k) * n) {
    throw InputError("seed marginal matrix size mismatch");
  }
  LazyBounds b(k, n);
  b.g_ = std::move(empty_marginals);
  std::fill(b.fresh_.begin(), b.fresh_.end(), 1);
  return b;
}

bool LazyBounds::fresh_all(int v) const {
  for (int c = 0; c < k_; ++c) {
    if (!fresh_[idx(c, v)]) return false;
  }
  return true;
}

void LazyBounds::invalidate() {
  std::fill(fresh_.begin(), fresh_.end(), 0);
}

double LazyBounds::score(const ColorWeights& y, int v) const {
  double s = 0.0;
  for (int c = 0; c < k_; ++c) s += y.weight(c) * g_[idx(c, v)];
  return s;
}

MWUConfig mwu_config(int k, int budget, double phi, double epsilon,
                     double max_empty_gain) {
  if (k < 1 || budget < 1) throw ConfigError("mwu_config: need k >= 1, B >= 1");
  if (epsilon <= 0.0 || epsilon >= 1.0) {
    throw ConfigError("mwu_config: epsilon must lie in (0, 1)");
  }
  if (phi < 1.0) throw ConfigError("mwu_config: phi must be >= 1");
  MWUConfig cfg;
  const double t = std::ceil(16.0 * budget * budget * std::log(static_cast<double>(k)) /
                             (epsilon * epsilon));
  cfg.iterations = std::max(1, static_cast<int>(t));
  cfg.loss_scale = std::max((1.0 + phi) * budget * max_empty_gain,
                            std::numeric_limits<double>::min());
  cfg.eta = std::min(epsilon * (1.0 + phi) / (8.0 * budget), 0.5);
  return cfg;
}

int lazy_best_response(const ColorWeights& y, LazyBounds& bounds,
                       const PayoffOracle& payoffs) {
  const int n = bounds.n();
  const int k = bounds.k();
  struct Entry {
    double key;
    int v;
  };
  // Max-heap on (key, then lowest index): rebuilt per call since y changes.
  const auto heap_less = [](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.v > b.v;
  };
  std::vector<Entry> heap;
  heap.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (payoffs.is_excluded(v)) continue;
    heap.push_back({bounds.score(y, v), v});
  }
  if (heap.empty()) throw InputError("best response: no admissible element");
  std::make_heap(heap.begin(), heap.end(), heap_less);

  int best = -1;
  double best_score = 0.0;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const Entry top = heap.back();
    heap.pop_back();
    // Strict comparison: bound ties are still evaluated so that the lowest
    // index among exact maximizers wins.
    if (best >= 0 && top.key < best_score) break;
    double exact = top.key;
    if (!bounds.fresh_all(top.v)) {
      for (int c = 0; c < k; ++c) {
        if (!bounds.fresh(c, top.v)) {
          bounds.set_fresh(c, top.v, payoffs.marginal(c, top.v));
        }
      }
      exact = bounds.score(y, top.v);
    }
    if (best < 0 || exact > best_score ||
        (exact == best_score && top.v < best)) {
      best = top.v;
      best_score = exact;
    }
  }
  return best;
}

ElementDistribution solve_mwu(const PayoffOracle& payoffs, LazyBounds& bounds,
                              const MWUConfig& cfg) {
  if (cfg.iterations < 1) throw ConfigError("solve_mwu: need T >= 1");
  if (cfg.eta <= 0.0 || cfg.eta >= 1.0) {
    throw ConfigError("solve_mwu: eta must lie in (0, 1) after scaling");
  }
  const int k = payoffs.k;
  std::vector<double> y(k, 1.0 / k);
  std::vector<double> xbar(payoffs.n, 0.0);
  const double share = 1.0 / cfg.iterations;
  for (int t = 0; t < cfg.iterations; ++t) {
    const ColorWeights weights{std::vector<double>(y)};
    const int v = lazy_best_response(weights, bounds, payoffs);
    double total = 0.0;
    for (int c = 0; c < k; ++c) {
      const double loss = payoffs.payoff(c, v, bounds.bound(c, v));
      const double scaled = loss / cfg.loss_scale;
      y[c] *= 1.0 - cfg.eta * scaled;
      if (y[c] < 0.0) {
        throw ConfigError("solve_mwu: weight driven below zero; eta too large "
                          "relative to loss_scale");
      }
      total += y[c];
    }
    if (total <= 0.0) {
      throw ConfigError("solve_mwu: all weights vanished; eta too large");
    }
    for (double& w : y) w /= total;
    xbar[v] += share;
  }
  return ElementDistribution::normalized(std::move(xbar));
}

LPSolution solve_lazy_resolve(const PayoffOracle& payoffs, LazyBounds& bounds) {
  const int k = payoffs.k;
  const int n = payoffs.n;
  IterationLP lp;
  lp.k = k;
  lp.n = n;
  lp.budget = payoffs.budget;
  lp.phi = payoffs.phi;
  if (payoffs.excluded) lp.excluded = *payoffs.excluded;
  lp.payoff.assign(static_cast<std::size_t>(k) * n, 0.0);
  for (int round = 0; round <= n + 1; ++round) {
    for (int c = 0; c < k; ++c) {
      for (int v = 0; v < n; ++v) {
        lp.at(c, v) = payoffs.budget * bounds.bound(c, v) + payoffs.phi * payoffs.base[c];
      }
    }
    LPSolution sol = solve_exact(lp);
    bool refreshed = false;
    for (int v : sol.x.support(1e-12)) {
      if (bounds.fresh_all(v)) continue;
      for (int c = 0; c < k; ++c) {
        if (!bounds.fresh(c, v)) bounds.set_fresh(c, v, payoffs.marginal(c, v));
      }
      refreshed = true;
    }
    if (!refreshed) return sol;
  }
  throw SolverError("lazy re-solve did not converge");
}

LPSolution solve_lazy_resolve(const MultiObjectiveInstance& instance,
                              const ElementSet& s, int budget, double phi,
                              LazyBounds& bounds) {
  const int k = instance.k();
  std::vector<std::unique_ptr<OracleCursor>> cursors;
  std::vector<double> base(k);
  for (int c = 0; c < k; ++c) {
    cursors.push_back(instance.oracle(c).cursor());
    cursors.back()->reset();
    for (int v : s.elements()) cursors.back()->add(v);
    base[c] = cursors.back()->base();
  }
  std::vector<char> excluded(instance.n(), 0);
  for (int v : s.elements()) excluded[v] = 1;
  PayoffOracle po;
  po.k = k;
  po.n = instance.n();
  po.budget = budget;
  po.phi = phi;
  po.base = std::move(base);
  po.excluded = &excluded;
  po.marginal = [&cursors](int c, int v) { return cursors[c]->gain(v); };
  return solve_lazy_resolve(po, bounds);
}

}  // namespace momax
