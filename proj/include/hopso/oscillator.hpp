#pragma once

#include <cmath>
#include <numbers>

#include "hopso/rng.hpp"

namespace hopso {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Damped-oscillator particle trajectory in one dimension:
///   x(t) = A0 e^{-lambda t} cos(omega t + theta) + a
inline double oscillator_position(double amplitude, double lambda,
                                  double omega, double theta, double t,
                                  double attractor) {
  return amplitude * std::exp(-lambda * t) * std::cos(omega * t + theta) +
         attractor;
}

///   v(t) = -omega A0 e^{-lambda t} sin(omega t + theta)
///          - lambda A0 e^{-lambda t} cos(omega t + theta)
inline double oscillator_velocity(double amplitude, double lambda,
                                  double omega, double theta, double t) {
  const double decayed = amplitude * std::exp(-lambda * t);
  return -omega * decayed * std::sin(omega * t + theta) -
         lambda * decayed * std::cos(omega * t + theta);
}

/// Clock update t' = t + u with u ~ Uniform[0, t_ul).
inline double advance_time(double t, double t_ul, RandomStream& rng) {
  return t + rng.uniform(0.0, t_ul);
}

/// The unique y in [r, r+2pi) with y = x (mod 2pi). Used to relocate best
/// positions into the reference window; particle positions themselves are
/// never wrapped.
inline double wrap_best(double x, double r) {
  double y = x - kTwoPi * std::floor((x - r) / kTwoPi);
  if (y - r >= kTwoPi) y -= kTwoPi;
  if (y < r) y += kTwoPi;
  return y;
}

/// Plain weighted average of personal and global best (non-periodic mode).
inline double attractor_linear(double p, double g, double c1, double c2) {
  return (c1 * p + c2 * g) / (c1 + c2);
}

/// Periodic attractor for best positions p, g inside [r, r+2pi). When the
/// two bests are closer across the window boundary than through the window
/// interior (|p-g| > pi), the smaller one is shifted by +2pi before
/// averaging and the result is wrapped back, so the attractor always lies on
/// the minor arc between p and g.
inline double attractor_periodic(double p, double g, double c1, double c2,
                                 double r) {
  if (std::abs(p - g) <= std::numbers::pi)
    return attractor_linear(p, g, c1, c2);
  const double ps = (p < g) ? p + kTwoPi : p;
  const double gs = (g < p) ? g + kTwoPi : g;
  return wrap_best(attractor_linear(ps, gs, c1, c2), r);
}

/// Amplitude floor proportional to the wrapped |p-g| distance (periodic
/// form): A_th = min(2pi - rem, rem)/2 * m with rem = |p-g| mod 2pi.
inline double threshold_amplitude(double p, double g, double m) {
  const double rem = std::fmod(std::abs(p - g), kTwoPi);
  return 0.5 * std::min(kTwoPi - rem, rem) * m;
}

/// Non-periodic amplitude floor: A_th = |p-g|/2 * m.
inline double threshold_amplitude_linear(double p, double g, double m) {
  return 0.5 * std::abs(p - g) * m;
}

/// Amplitude and phase reconstructed from a position/velocity snapshot at
/// t = 0, or a dead marker when the phase is undefined.
struct PhaseInit {
  double amplitude = 0.0;
  double theta = 0.0;
  bool dead = false;
};

/// Solves x(0) = x0, v(0) = v0 for (A0, theta):
///   A0    = sqrt((x0-a)^2 + (v0 + lambda (x0-a))^2 / omega^2)
///   theta = arccos((x0-a)/A0), flipped to 2pi - theta when the
///           reconstructed v(0) disagrees with v0 (beyond 1e-9).
/// If A0 = 0 (arccos argument undefined) or roundoff pushes the argument
/// outside [-1, 1], the particle is reported dead; the argument is never
/// clipped, since clipping would break the oscillator's smooth behavior.
inline PhaseInit init_amplitude_phase(double x0, double v0, double attractor,
                                      double lambda, double omega) {
  const double dx = x0 - attractor;
  const double vterm = (v0 + lambda * dx) / omega;
  const double amplitude = std::sqrt(dx * dx + vterm * vterm);
  if (amplitude == 0.0) return PhaseInit{0.0, 0.0, true};

  const double arg = dx / amplitude;
  if (arg > 1.0 || arg < -1.0) return PhaseInit{amplitude, 0.0, true};

  double theta = std::acos(arg);
  const double v_rec = -omega * amplitude * std::sin(theta) -
                       lambda * amplitude * std::cos(theta);
  if (std::abs(v_rec - v0) > 1e-9) theta = kTwoPi - theta;
  return PhaseInit{amplitude, theta, false};
}

}  // namespace hopso
