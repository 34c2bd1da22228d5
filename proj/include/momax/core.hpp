#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "momax/common.hpp"

namespace momax {

// Finite universe; elements are dense indices 0..n-1.
struct Universe {
  int n = 0;
};

// Color (objective) index set 0..k-1.
struct ColorSet {
  int k = 0;
};

// Ordered subset of a universe with O(1) membership tests.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe_size);
  ElementSet(int universe_size, std::initializer_list<int> elems);
  ElementSet(int universe_size, std::span<const int> elems);

  // Returns false (and does nothing) if v is already present.
  bool add(int v);
  bool contains(int v) const { return v >= 0 && v < n_ && in_[v] != 0; }
  int size() const { return static_cast<int>(order_.size()); }
  bool empty() const { return order_.empty(); }
  int universe_size() const { return n_; }
  // Insertion order.
  const std::vector<int>& elements() const { return order_; }
  std::span<const int> span() const { return order_; }
  std::vector<int> sorted() const;

 private:
  int n_ = 0;
  std::vector<int> order_;
  std::vector<char> in_;
};

class SubmodularOracle;

// Incremental evaluator pinned to a growing set S. base() is the cached
// f(S) and is free; gain(v) charges exactly one oracle evaluation; add(v)
// updates state without charging.
class OracleCursor {
 public:
  virtual ~OracleCursor() = default;
  virtual void reset() = 0;
  virtual void add(int v) = 0;
  virtual double base() const = 0;
  virtual double gain(int v) = 0;

 protected:
  static void charge(const SubmodularOracle& oracle);
};

// Monotone submodular set function f : 2^V -> R>=0 with evaluation
// accounting. Every value() and every cursor gain() counts as one
// evaluation. Instances are immutable after construction; for concurrent
// use, clone() per worker (clones share heavy data, counters start at 0).
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  double value(std::span<const int> s) const {
    charge_one();
    return eval(s);
  }
  double value(const ElementSet& s) const { return value(s.span()); }

  // f(∅); computed once and cached, later calls are free.
  double empty_value() const;

  virtual int universe_size() const = 0;
  virtual std::unique_ptr<SubmodularOracle> clone() const = 0;
  virtual std::unique_ptr<OracleCursor> cursor() const;

  std::uint64_t calls() const { return calls_; }
  void reset_calls() { calls_ = 0; }

 protected:
  virtual double eval(std::span<const int> s) const = 0;
  // Shipped oracles that know f(∅) structurally set this at construction
  // so cursor resets never charge.
  void set_empty_value(double v) const {
    empty_value_ = v;
    empty_known_ = true;
  }
  void charge_one() const { ++calls_; }

 private:
  friend class OracleCursor;
  mutable std::uint64_t calls_ = 0;
  mutable double empty_value_ = 0.0;
  mutable bool empty_known_ = false;
};

inline void OracleCursor::charge(const SubmodularOracle& oracle) {
  oracle.charge_one();
}

// f(S ∪ {v}) - f(S). Two evaluations, or one when f(S) is supplied.
double marginal_gain(const SubmodularOracle& f, int v, const ElementSet& s);
double marginal_gain(const SubmodularOracle& f, int v, const ElementSet& s,
                     double value_of_s);

// k monotone submodular objectives over one shared universe.
class MultiObjectiveInstance {
 public:
  MultiObjectiveInstance(std::vector<std::unique_ptr<SubmodularOracle>> oracles,
                         std::string name = "");

  int n() const { return n_; }
  int k() const { return static_cast<int>(oracles_.size()); }
  const std::string& name() const { return name_; }
  const SubmodularOracle& oracle(int c) const { return *oracles_.at(c); }

  std::uint64_t total_calls() const;
  void reset_calls();
  // Same objectives, fresh counters; heavy data is shared.
  MultiObjectiveInstance clone() const;

 private:
  int n_ = 0;
  std::vector<std::unique_ptr<SubmodularOracle>> oracles_;
  std::string name_;
};

struct MinValue {
  double value = 0.0;
  int color = 0;  // argmin; lowest index on ties
};

// min_c f_c(S) and its argmin color. Costs k evaluations.
MinValue min_value(const MultiObjectiveInstance& instance, const ElementSet& s);

struct BruteForceResult {
  ElementSet set;
  double value = 0.0;
};

// Exact optimum of min_c f_c(S) over |S| <= budget by enumeration of all
// budget-sized subsets in lexicographic order (sufficient by monotonicity;
// the first maximizer in that order is returned). Refuses when C(n, budget)
// exceeds 1e7.
BruteForceResult brute_force_opt(const MultiObjectiveInstance& instance,
                                 int budget);

// Probability distribution over universe elements.
class ElementDistribution {
 public:
  // Validates mass >= 0 and sum == 1 within 1e-9.
  explicit ElementDistribution(std::vector<double> mass);
  // Divides by the (positive) total.
  static ElementDistribution normalized(std::vector<double> weights);

  int size() const { return static_cast<int>(mass_.size()); }
  double mass(int v) const { return mass_[v]; }
  const std::vector<double>& masses() const { return mass_; }
  std::vector<int> support(double tol = 0.0) const;

  // Inverse-CDF sampling in index order; deterministic given the RNG state.
  int sample(Rng& rng) const;

 private:
  std::vector<double> mass_;
};

// Probability distribution over colors.
class ColorWeights {
 public:
  explicit ColorWeights(std::vector<double> weight);
  static ColorWeights uniform(int k);
  static ColorWeights normalized(std::vector<double> weights);

  int size() const { return static_cast<int>(weight_.size()); }
  double weight(int c) const { return weight_[c]; }
  const std::vector<double>& weights() const { return weight_; }

 private:
  std::vector<double> weight_;
};

}  // namespace momax
