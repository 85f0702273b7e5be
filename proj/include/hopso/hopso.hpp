#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hopso/optimizer.hpp"
#include "hopso/oscillator.hpp"
#include "hopso/rng.hpp"

namespace hopso {

/// Harmonic-oscillator PSO settings. The defaults are the hydrogen-protocol
/// values; omega is not fixed by the method description and defaults to 1,
/// which together with t_ul = 2pi makes one time window span a full
/// oscillation.
struct HopsoConfig {
  int num_particles = 10;
  int max_iters = 500;
  double lambda = 0.1;  // damping rate
  double c1 = 1.0;      // personal-best attraction weight
  double c2 = 1.0;      // global-best attraction weight
  double m = 2.05;      // threshold-amplitude multiplier
  double t_ul = kTwoPi; // time-increment upper bound
  double omega = 1.0;   // angular frequency
  bool periodic = true; // enable the periodic-landscape corrections
  std::uint64_t seed = 0;
};

inline void validate(const HopsoConfig& c) {
  if (c.num_particles < 1 || c.max_iters < 0 || c.lambda < 0.0 ||
      c.c1 <= 0.0 || c.c2 <= 0.0 || c.m <= 0.0 || c.t_ul <= 0.0 ||
      c.omega <= 0.0)
    throw std::invalid_argument("invalid HOPSO configuration");
}

/// Per-particle oscillator state. All per-dimension quantities are vectors
/// of the problem dimension; the clock is shared across dimensions.
struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> personal_best_pos;  // wrapped into [r, r+2pi) when periodic
  double personal_best_val = std::numeric_limits<double>::infinity();
  std::vector<double> attractor;
  std::vector<double> amplitude;  // A0 per dimension
  std::vector<double> threshold;  // A_th per dimension
  std::vector<double> phase;      // theta per dimension
  double clock = 0.0;
  bool dead = false;
  bool evaluated = false;
};

/// Swarm snapshot exposed to observers.
struct SwarmState {
  std::vector<Particle> particles;
  std::vector<double> global_best_pos;
  double global_best_val = std::numeric_limits<double>::infinity();
  double window_reference = 0.0;  // r
  long long eval_count = 0;
};

using HopsoObserver = std::function<void(int iteration, const SwarmState&)>;

namespace detail {

/// Recomputes attractor, threshold, amplitude and phase for one particle
/// from its current (unwrapped) position and velocity, marking it dead when
/// the phase is undefined. The stored amplitude takes the threshold floor at
/// these recomputation events.
inline void recompute_dynamics(Particle& particle,
                               const std::vector<double>& global_best,
                               const HopsoConfig& cfg, double r) {
  const int dim = static_cast<int>(particle.position.size());
  for (int d = 0; d < dim; ++d) {
    const double p = particle.personal_best_pos[d];
    const double g = global_best[d];
    particle.attractor[d] = cfg.periodic
                                ? attractor_periodic(p, g, cfg.c1, cfg.c2, r)
                                : attractor_linear(p, g, cfg.c1, cfg.c2);
    particle.threshold[d] = cfg.periodic
                                ? threshold_amplitude(p, g, cfg.m)
                                : threshold_amplitude_linear(p, g, cfg.m);
    const PhaseInit init =
        init_amplitude_phase(particle.position[d], particle.velocity[d],
                             particle.attractor[d], cfg.lambda, cfg.omega);
    if (init.dead) {
      particle.dead = true;
      return;
    }
    particle.amplitude[d] = std::max(init.amplitude, particle.threshold[d]);
    particle.phase[d] = init.theta;
  }
}

}  // namespace detail

/// Periodic HOPSO run. One master stream drives the run-level draws (the
/// window reference r); particle i consumes only its own child stream
/// master.split(i), so results do not depend on evaluation scheduling.
/// The observer, when given, is called with the swarm after initialization
/// (iteration 0) and after each completed iteration.
inline RunResult hopso_run(Evaluator& cost, int dim, const HopsoConfig& cfg,
                           RandomStream& master,
                           const HopsoObserver& observer = {}) {
  validate(cfg);
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");

  SwarmState swarm;
  swarm.window_reference = cfg.periodic ? master.uniform(0.0, kTwoPi) : 0.0;
  const double r = swarm.window_reference;

  std::vector<RandomStream> streams;
  streams.reserve(cfg.num_particles);
  for (int i = 0; i < cfg.num_particles; ++i) streams.push_back(master.split(i));

  swarm.particles.assign(cfg.num_particles, Particle{});
  for (int i = 0; i < cfg.num_particles; ++i) {
    Particle& particle = swarm.particles[i];
    particle.position.resize(dim);
    particle.velocity.resize(dim);
    particle.personal_best_pos.resize(dim);
    particle.attractor.assign(dim, 0.0);
    particle.amplitude.assign(dim, 0.0);
    particle.threshold.assign(dim, 0.0);
    particle.phase.assign(dim, 0.0);
    for (int d = 0; d < dim; ++d)
      particle.position[d] = streams[i].uniform(0.0, kTwoPi);
    for (int d = 0; d < dim; ++d)
      particle.velocity[d] = streams[i].uniform(-1.0, 1.0);
  }

  RunResult result;
  auto record_best = [&](const Particle& particle) {
    swarm.global_best_val = particle.personal_best_val;
    swarm.global_best_pos = particle.personal_best_pos;
  };

  // Initial evaluation sweep.
  for (int i = 0; i < cfg.num_particles; ++i) {
    Particle& particle = swarm.particles[i];
    if (cost.exhausted()) {
      particle.dead = true;  // never evaluated; cannot participate
      continue;
    }
    particle.personal_best_val = cost(particle.position, streams[i]);
    particle.evaluated = true;
    for (int d = 0; d < dim; ++d)
      particle.personal_best_pos[d] =
          cfg.periodic ? wrap_best(particle.position[d], r)
                       : particle.position[d];
    if (particle.personal_best_val < swarm.global_best_val)
      record_best(particle);
  }

  if (!swarm.global_best_pos.empty()) {
    for (auto& particle : swarm.particles)
      if (particle.evaluated && !particle.dead)
        detail::recompute_dynamics(particle, swarm.global_best_pos, cfg, r);
    result.trace.push_back(swarm.global_best_val);
  }
  swarm.eval_count = cost.used();
  if (observer) observer(0, swarm);

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    bool out_of_budget = cost.exhausted();
    bool any_alive = false;
    for (auto& p : swarm.particles)
      if (!p.dead) any_alive = true;
    if (!any_alive) {
      result.all_particles_dead = true;
      break;
    }
    if (out_of_budget) break;

    for (int i = 0; i < cfg.num_particles; ++i) {
      Particle& particle = swarm.particles[i];
      if (particle.dead) continue;
      if (cost.exhausted()) {
        out_of_budget = true;
        break;
      }
      const double t = advance_time(particle.clock, cfg.t_ul, streams[i]);
      particle.clock = t;
      for (int d = 0; d < dim; ++d) {
        const double decayed =
            particle.amplitude[d] * std::exp(-cfg.lambda * t);
        const double a_eff = std::max(decayed, particle.threshold[d]);
        const double angle = cfg.omega * t + particle.phase[d];
        particle.position[d] =
            a_eff * std::cos(angle) + particle.attractor[d];
        particle.velocity[d] = -cfg.omega * a_eff * std::sin(angle) -
                               cfg.lambda * a_eff * std::cos(angle);
      }
      const double value = cost(particle.position, streams[i]);
      if (value < particle.personal_best_val) {
        particle.personal_best_val = value;
        for (int d = 0; d < dim; ++d)
          particle.personal_best_pos[d] =
              cfg.periodic ? wrap_best(particle.position[d], r)
                           : particle.position[d];
        particle.clock = 0.0;
        detail::recompute_dynamics(particle, swarm.global_best_pos, cfg, r);
      }
    }

    // Global-best check across the swarm; on improvement all clocks reset
    // and swarm-wide dynamics are recomputed against the new best.
    int best_index = -1;
    for (int i = 0; i < cfg.num_particles; ++i) {
      const Particle& particle = swarm.particles[i];
      if (particle.evaluated &&
          particle.personal_best_val < swarm.global_best_val) {
        swarm.global_best_val = particle.personal_best_val;
        best_index = i;
      }
    }
    if (best_index >= 0) {
      swarm.global_best_pos = swarm.particles[best_index].personal_best_pos;
      for (auto& particle : swarm.particles) {
        if (particle.dead) continue;
        particle.clock = 0.0;
        detail::recompute_dynamics(particle, swarm.global_best_pos, cfg, r);
      }
    }

    result.trace.push_back(swarm.global_best_val);
    swarm.eval_count = cost.used();
    if (observer) observer(iter, swarm);
    if (out_of_budget) break;
  }

  result.best_value = swarm.global_best_val;
  result.best_position = swarm.global_best_pos;
  result.evaluations_used = cost.used();
  for (const auto& particle : swarm.particles)
    if (particle.dead && particle.evaluated) ++result.dead_count;
  return result;
}

inline RunResult hopso_run(Evaluator& cost, int dim, const HopsoConfig& cfg,
                           const HopsoObserver& observer = {}) {
  RandomStream master(cfg.seed);
  return hopso_run(cost, dim, cfg, master, observer);
}

}  // namespace hopso
