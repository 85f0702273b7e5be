#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hopso/optimizer.hpp"
#include "hopso/oscillator.hpp"
#include "hopso/rng.hpp"

namespace hopso {

/// Clerc constriction PSO baseline: no periodic corrections, no bounds;
/// positions initialize in [0, 2pi)^d and then roam freely.
struct PsoConfig {
  int num_particles = 10;
  int max_iters = 500;
  double c1 = 2.05;
  double c2 = 2.05;
  double chi = 0.729;  // constriction factor
  std::uint64_t seed = 0;
};

/// v <- chi [v + c1 u1 (p - x) + c2 u2 (g - x)], x <- x + v, with fresh
/// u1, u2 ~ U[0,1] per coordinate per step. Global best is updated after
/// each full sweep, so per-particle updates are order-independent.
inline RunResult pso_run(Evaluator& cost, int dim, const PsoConfig& cfg,
                         RandomStream& master) {
  if (cfg.num_particles < 1 || cfg.max_iters < 0 || cfg.chi <= 0.0 ||
      cfg.c1 < 0.0 || cfg.c2 < 0.0)
    throw std::invalid_argument("invalid PSO configuration");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  (void)master;

  struct Member {
    std::vector<double> position, velocity, best_pos;
    double best_val = std::numeric_limits<double>::infinity();
    bool evaluated = false;
  };

  std::vector<RandomStream> streams;
  streams.reserve(cfg.num_particles);
  for (int i = 0; i < cfg.num_particles; ++i) streams.push_back(master.split(i));

  std::vector<Member> swarm(cfg.num_particles);
  for (int i = 0; i < cfg.num_particles; ++i) {
    Member& member = swarm[i];
    member.position.resize(dim);
    member.velocity.resize(dim);
    for (int d = 0; d < dim; ++d)
      member.position[d] = streams[i].uniform(0.0, kTwoPi);
    for (int d = 0; d < dim; ++d)
      member.velocity[d] = streams[i].uniform(-1.0, 1.0);
  }

  RunResult result;
  std::vector<double> global_best_pos;
  double global_best_val = std::numeric_limits<double>::infinity();

  for (int i = 0; i < cfg.num_particles; ++i) {
    if (cost.exhausted()) break;
    Member& member = swarm[i];
    member.best_val = cost(member.position, streams[i]);
    member.best_pos = member.position;
    member.evaluated = true;
    if (member.best_val < global_best_val) {
      global_best_val = member.best_val;
      global_best_pos = member.best_pos;
    }
  }
  if (!global_best_pos.empty()) result.trace.push_back(global_best_val);

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (cost.exhausted() || global_best_pos.empty()) break;
    bool out_of_budget = false;
    for (int i = 0; i < cfg.num_particles; ++i) {
      if (cost.exhausted()) {
        out_of_budget = true;
        break;
      }
      Member& member = swarm[i];
      if (!member.evaluated) continue;
      for (int d = 0; d < dim; ++d) {
        const double u1 = streams[i].uniform01();
        const double u2 = streams[i].uniform01();
        member.velocity[d] =
            cfg.chi * (member.velocity[d] +
                       cfg.c1 * u1 * (member.best_pos[d] - member.position[d]) +
                       cfg.c2 * u2 * (global_best_pos[d] - member.position[d]));
        member.position[d] += member.velocity[d];
      }
      const double value = cost(member.position, streams[i]);
      if (value < member.best_val) {
        member.best_val = value;
        member.best_pos = member.position;
      }
    }
    for (const auto& member : swarm) {
      if (member.evaluated && member.best_val < global_best_val) {
        global_best_val = member.best_val;
        global_best_pos = member.best_pos;
      }
    }
    result.trace.push_back(global_best_val);
    if (out_of_budget) break;
  }

  result.best_value = global_best_val;
  result.best_position = global_best_pos;
  result.evaluations_used = cost.used();
  return result;
}

inline RunResult pso_run(Evaluator& cost, int dim, const PsoConfig& cfg) {
  RandomStream master(cfg.seed);
  return pso_run(cost, dim, cfg, master);
}

}  // namespace hopso
