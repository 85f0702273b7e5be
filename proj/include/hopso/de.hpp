#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hopso/optimizer.hpp"
#include "hopso/oscillator.hpp"
#include "hopso/rng.hpp"

namespace hopso {

/// best/1/bin differential evolution with deferred (generation-batch)
/// updates, dithered mutation factor, and clipping bounds. No final polish
/// step is applied.
struct DeConfig {
  int population = 32;
  int max_generations = 157;
  double crossover = 0.7;      // CR
  double mutation_min = 0.5;   // F dithered per generation in [min, max)
  double mutation_max = 1.0;
  double lower = 0.0;
  double upper = kTwoPi;
  std::uint64_t seed = 0;
};

inline RunResult de_run(Evaluator& cost, int dim, const DeConfig& cfg,
                        RandomStream& master) {
  if (cfg.population < 4 || cfg.max_generations < 0 || cfg.crossover < 0.0 ||
      cfg.crossover > 1.0 || cfg.mutation_min < 0.0 ||
      cfg.mutation_max < cfg.mutation_min || cfg.upper <= cfg.lower)
    throw std::invalid_argument("invalid DE configuration");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");

  const int pop = cfg.population;
  std::vector<RandomStream> streams;
  streams.reserve(pop);
  for (int i = 0; i < pop; ++i) streams.push_back(master.split(i));

  std::vector<std::vector<double>> members(pop, std::vector<double>(dim));
  std::vector<double> energies(pop, std::numeric_limits<double>::infinity());
  std::vector<bool> evaluated(pop, false);
  for (int i = 0; i < pop; ++i)
    for (int d = 0; d < dim; ++d)
      members[i][d] = streams[i].uniform(cfg.lower, cfg.upper);

  RunResult result;
  int best = -1;
  for (int i = 0; i < pop; ++i) {
    if (cost.exhausted()) break;
    energies[i] = cost(members[i], streams[i]);
    evaluated[i] = true;
    if (best < 0 || energies[i] < energies[best]) best = i;
  }
  if (best >= 0) result.trace.push_back(energies[best]);

  std::vector<std::vector<double>> trials(pop, std::vector<double>(dim));
  std::vector<double> trial_energy(pop);
  std::vector<bool> trial_done(pop);

  for (int gen = 0; gen < cfg.max_generations; ++gen) {
    if (best < 0 || cost.exhausted()) break;
    const double f = master.uniform(cfg.mutation_min, cfg.mutation_max);

    // Deferred strategy: all trials are generated against the current best
    // and population, then evaluated as a batch before any selection.
    for (int i = 0; i < pop; ++i) {
      if (!evaluated[i]) continue;
      std::size_t r1 = streams[i].uniform_index(pop);
      while (static_cast<int>(r1) == i) r1 = streams[i].uniform_index(pop);
      std::size_t r2 = streams[i].uniform_index(pop);
      while (static_cast<int>(r2) == i || r2 == r1)
        r2 = streams[i].uniform_index(pop);
      const std::size_t jrand = streams[i].uniform_index(dim);
      for (int d = 0; d < dim; ++d) {
        const bool take = streams[i].uniform01() < cfg.crossover ||
                          static_cast<std::size_t>(d) == jrand;
        double v = take ? members[best][d] +
                              f * (members[r1][d] - members[r2][d])
                        : members[i][d];
        trials[i][d] = std::clamp(v, cfg.lower, cfg.upper);
      }
    }

    std::fill(trial_done.begin(), trial_done.end(), false);
    for (int i = 0; i < pop; ++i) {
      if (!evaluated[i]) continue;
      if (cost.exhausted()) break;
      trial_energy[i] = cost(trials[i], streams[i]);
      trial_done[i] = true;
    }
    for (int i = 0; i < pop; ++i) {
      if (trial_done[i] && trial_energy[i] < energies[i]) {
        members[i] = trials[i];
        energies[i] = trial_energy[i];
      }
    }
    for (int i = 0; i < pop; ++i)
      if (evaluated[i] && energies[i] < energies[best]) best = i;
    result.trace.push_back(energies[best]);
  }

  if (best >= 0) {
    result.best_value = energies[best];
    result.best_position = members[best];
  }
  result.evaluations_used = cost.used();
  return result;
}

inline RunResult de_run(Evaluator& cost, int dim, const DeConfig& cfg) {
  RandomStream master(cfg.seed);
  return de_run(cost, dim, cfg, master);
}

}  // namespace hopso
