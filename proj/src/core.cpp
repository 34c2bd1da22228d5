#include "momax/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace momax {

ElementSet::ElementSet(int universe_size) : n_(universe_size), in_(universe_size, 0) {
  if (universe_size < 0) throw InputError("universe size must be nonnegative");
}

ElementSet::ElementSet(int universe_size, std::initializer_list<int> elems)
    : ElementSet(universe_size) {
  for (int v : elems) add(v);
}

ElementSet::ElementSet(int universe_size, std::span<const int> elems)
    : ElementSet(universe_size) {
  for (int v : elems) add(v);
}

bool ElementSet::add(int v) {
  if (v < 0 || v >= n_) throw InputError("element index out of range");
  if (in_[v]) return false;
  in_[v] = 1;
  order_.push_back(v);
  return true;
}

std::vector<int> ElementSet::sorted() const {
  std::vector<int> out = order_;
  std::sort(out.begin(), out.end());
  return out;
}

double SubmodularOracle::empty_value() const {
  if (!empty_known_) {
    set_empty_value(value(std::span<const int>{}));
  }
  return empty_value_;
}

namespace {

// Fallback cursor: keeps a copy of S and re-evaluates f(S ∪ {v}) from
// scratch. Gains computed at the current base are memoized so that add()
// after gain() does not re-evaluate.
class GenericCursor final : public OracleCursor {
 public:
  explicit GenericCursor(const SubmodularOracle& oracle) : oracle_(oracle) {
    reset();
  }

  void reset() override {
    members_.clear();
    base_ = oracle_.empty_value();
    memo_.clear();
  }

  void add(int v) override {
    auto it = memo_.find(v);
    if (it != memo_.end()) {
      base_ += it->second;
    } else {
      members_.push_back(v);
      base_ = oracle_.value(members_);
      members_.pop_back();
    }
    members_.push_back(v);
    memo_.clear();
  }

  double base() const override { return base_; }

  double gain(int v) override {
    members_.push_back(v);
    const double with = oracle_.value(members_);
    members_.pop_back();
    const double g = with - base_;
    memo_[v] = g;
    return g;
  }

 private:
  const SubmodularOracle& oracle_;
  std::vector<int> members_;
  double base_ = 0.0;
  std::unordered_map<int, double> memo_;
};

}  // namespace

std::unique_ptr<OracleCursor> SubmodularOracle::cursor() const {
  return std::make_unique<GenericCursor>(*this);
}

double marginal_gain(const SubmodularOracle& f, int v, const ElementSet& s) {
  return marginal_gain(f, v, s, f.value(s));
}

double marginal_gain(const SubmodularOracle& f, int v, const ElementSet& s,
                     double value_of_s) {
  if (v < 0 || v >= f.universe_size()) {
    throw InputError("marginal_gain: element index out of range");
  }
  if (s.contains(v)) return 0.0;
  std::vector<int> with(s.elements());
  with.push_back(v);
  return f.value(with) - value_of_s;
}

MultiObjectiveInstance::MultiObjectiveInstance(
    std::vector<std::unique_ptr<SubmodularOracle>> oracles, std::string name)
    : oracles_(std::move(oracles)), name_(std::move(name)) {
  if (oracles_.empty()) throw InputError("instance needs at least one color");
  n_ = oracles_.front()->universe_size();
  for (const auto& o : oracles_) {
    if (!o) throw InputError("null oracle");
    if (o->universe_size() != n_) {
      throw InputError("all oracles must share the same universe");
    }
  }
}

std::uint64_t MultiObjectiveInstance::total_calls() const {
  std::uint64_t total = 0;
  for (const auto& o : oracles_) total += o->calls();
  return total;
}

void MultiObjectiveInstance::reset_calls() {
  for (const auto& o : oracles_) o->reset_calls();
}

MultiObjectiveInstance MultiObjectiveInstance::clone() const {
  std::vector<std::unique_ptr<SubmodularOracle>> copies;
  copies.reserve(oracles_.size());
  for (const auto& o : oracles_) copies.push_back(o->clone());
  return MultiObjectiveInstance(std::move(copies), name_);
}

MinValue min_value(const MultiObjectiveInstance& instance, const ElementSet& s) {
  MinValue best{instance.oracle(0).value(s), 0};
  for (int c = 1; c < instance.k(); ++c) {
    const double v = instance.oracle(c).value(s);
    if (v < best.value) best = {v, c};
  }
  return best;
}

namespace {

double subsets_to_enumerate(int n, int b) {
  double total = 1.0;
  for (int i = 0; i < b; ++i) total = total * (n - i) / (i + 1);
  return total;
}

}  // namespace

BruteForceResult brute_force_opt(const MultiObjectiveInstance& instance,
                                 int budget) {
  const int n = instance.n();
  if (budget < 0) throw InputError("budget must be nonnegative");
  const int size = std::min(budget, n);
  if (size == 0) {
    ElementSet empty(n);
    return {empty, min_value(instance, empty).value};
  }
  if (subsets_to_enumerate(n, size) > 1e7) {
    throw InputError("brute_force_opt: more than 1e7 subsets to enumerate");
  }

  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  std::vector<int> best_pick;
  double best_value = -1.0;
  for (;;) {
    double worst = std::numeric_limits<double>::infinity();
    for (int c = 0; c < instance.k(); ++c) {
      worst = std::min(worst, instance.oracle(c).value(pick));
    }
    if (worst > best_value) {
      best_value = worst;
      best_pick = pick;
    }
    // next combination in lexicographic order
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {ElementSet(n, best_pick), best_value};
}

ElementDistribution::ElementDistribution(std::vector<double> mass)
    : mass_(std::move(mass)) {
  double total = 0.0;
  for (double m : mass_) {
    if (m < 0.0) throw InputError("distribution mass must be nonnegative");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("distribution masses must sum to 1");
  }
}

ElementDistribution ElementDistribution::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InputError("distribution mass must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw InputError("cannot normalize an all-zero vector");
  for (double& w : weights) w /= total;
  return ElementDistribution(std::move(weights));
}

std::vector<int> ElementDistribution::support(double tol) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (mass_[v] > tol) out.push_back(v);
  }
  return out;
}

int ElementDistribution::sample(Rng& rng) const {
  const double u = rng.uniform01();
  double acc = 0.0;
  int last_positive = -1;
  for (int v = 0; v < size(); ++v) {
    if (mass_[v] <= 0.0) continue;
    last_positive = v;
    acc += mass_[v];
    if (u < acc) return v;
  }
  if (last_positive < 0) throw InputError("cannot sample from zero distribution");
  return last_positive;  // u landed in the rounding slack
}

ColorWeights::ColorWeights(std::vector<double> weight) : weight_(std::move(weight)) {
  double total = 0.0;
  for (double w : weight_) {
    if (w < 0.0) throw InputError("color weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("color weights must sum to 1");
  }
}

ColorWeights ColorWeights::uniform(int k) {
  if (k <= 0) throw InputError("need at least one color");
  return ColorWeights(std::vector<double>(k, 1.0 / k));
}

ColorWeights ColorWeights::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InputError("color weights must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw InputError("cannot normalize an all-zero vector");
  for (double& w : weights) w /= total;
  return ColorWeights(std::move(weights));
}

}  // namespace momax
