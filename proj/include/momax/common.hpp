#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace momax {

// Bad arguments to an operation (out-of-range element, B > n, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad configuration (MWU step size, experiment config file, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance files that cannot be loaded or violate instance invariants.
struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure inside the LP solver; message carries diagnostics.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A run exceeded its per-run deadline.
struct Timeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kValueTol = 1e-9;

// splitmix64 finalizer; used to derive independent seed streams.
std::uint64_t mix64(std::uint64_t x);

// Deterministic RNG. mt19937_64 plus explicit output mappings, so that
// sequences are identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Independent stream derived from (master, stream).
  static Rng derived(std::uint64_t master, std::uint64_t stream) {
    return Rng(mix64(master * 0x9e3779b97f4a7c15ULL + stream + 1));
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform integer in [lo, hi], inclusive. Rejection sampling.
  std::uint64_t uniform_u64(std::uint64_t range);  // [0, range)
  int uniform_int(int lo, int hi);

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Per-run wall-clock limit checked cooperatively inside long loops.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }
  bool passed() const {
    return at_ && std::chrono::steady_clock::now() > *at_;
  }
  void check() const {
    if (passed()) throw Timeout("run exceeded its time limit");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

// Runs fn(i) for i in [0, count) on up to `workers` threads (0 = hardware).
// Results must be written to per-index slots by the caller.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

}  // namespace momax
