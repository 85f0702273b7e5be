#pragma once

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "hopso/rng.hpp"

namespace hopso {

/// Signals an evaluation request past the configured budget. Optimizers
/// normally check Evaluator::exhausted() first and treat this as a stop
/// condition, never an error.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

/// Counted, optionally budgeted cost function. Every call is counted exactly
/// once. Evaluations are pure given the parameter vector and the random
/// stream, so distinct evaluations may run concurrently as long as each uses
/// its own stream.
class Evaluator {
 public:
  using Fn = std::function<double(std::span<const double>, RandomStream&)>;

  explicit Evaluator(Fn fn, long long budget = -1)
      : fn_(std::move(fn)), budget_(budget) {}

  double operator()(std::span<const double> x, RandomStream& rng) {
    if (exhausted()) throw BudgetExhausted();
    ++used_;
    return fn_(x, rng);
  }

  /// True when no further evaluations are allowed (budget < 0 is unlimited).
  bool exhausted() const { return budget_ >= 0 && used_ >= budget_; }
  long long used() const { return used_; }
  long long budget() const { return budget_; }

 private:
  Fn fn_;
  long long budget_;
  long long used_ = 0;
};

/// Outcome of a single optimizer run.
struct RunResult {
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> best_position;
  /// Global best after initialization and after each iteration; monotone
  /// non-increasing.
  std::vector<double> trace;
  long long evaluations_used = 0;
  int dead_count = 0;
  /// Set when the swarm died out before the iteration limit.
  bool all_particles_dead = false;
};

}  // namespace hopso
