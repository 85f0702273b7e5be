#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hopso/pauli.hpp"
#include "hopso/rng.hpp"

namespace hopso {

/// Complex amplitude vector of length 2^n_qubits. Qubit 0 is the least
/// significant bit of the amplitude index. Gate application preserves the
/// L2 norm to within roundoff.
class Statevector {
 public:
  /// Initializes |0...0>.
  explicit Statevector(int n_qubits)
      : n_qubits_(n_qubits),
        amps_(std::size_t{1} << n_qubits, std::complex<double>(0.0, 0.0)) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    if (n_qubits > 30) throw std::invalid_argument("n_qubits too large");
    amps_[0] = 1.0;
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }

  std::complex<double>& amp(std::size_t i) { return amps_[i]; }
  const std::complex<double>& amp(std::size_t i) const { return amps_[i]; }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

enum class GateKind { RY, RZ, CNOT };

/// One circuit operation: a single-qubit rotation or a CNOT.
struct GateOp {
  GateKind kind;
  int target;
  int control = -1;   // CNOT only
  double angle = 0.0; // RY/RZ only, radians

  static GateOp ry(int target, double angle) {
    return GateOp{GateKind::RY, target, -1, angle};
  }
  static GateOp rz(int target, double angle) {
    return GateOp{GateKind::RZ, target, -1, angle};
  }
  static GateOp cnot(int control, int target) {
    return GateOp{GateKind::CNOT, target, control, 0.0};
  }
};

/// Applies the gate unitary in place.
///   RY(a) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]]
///   RZ(a) = diag(e^{-ia/2}, e^{+ia/2})
///   CNOT flips the target amplitude pairs where the control bit is 1.
inline void apply_gate(Statevector& state, const GateOp& gate) {
  const int n = state.n_qubits();
  if (gate.target < 0 || gate.target >= n)
    throw std::invalid_argument("gate target out of range");
  auto& amps = state.amplitudes();
  const std::size_t dim = amps.size();
  const std::size_t tbit = std::size_t{1} << gate.target;

  switch (gate.kind) {
    case GateKind::RY: {
      const double c = std::cos(0.5 * gate.angle);
      const double s = std::sin(0.5 * gate.angle);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        const auto a0 = amps[i];
        const auto a1 = amps[i | tbit];
        amps[i] = c * a0 - s * a1;
        amps[i | tbit] = s * a0 + c * a1;
      }
      break;
    }
    case GateKind::RZ: {
      const std::complex<double> p0 = std::polar(1.0, -0.5 * gate.angle);
      const std::complex<double> p1 = std::polar(1.0, 0.5 * gate.angle);
      for (std::size_t i = 0; i < dim; ++i) amps[i] *= (i & tbit) ? p1 : p0;
      break;
    }
    case GateKind::CNOT: {
      if (gate.control < 0 || gate.control >= n)
        throw std::invalid_argument("gate control out of range");
      if (gate.control == gate.target)
        throw std::invalid_argument("CNOT control equals target");
      const std::size_t cbit = std::size_t{1} << gate.control;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
      break;
    }
  }
}

/// <psi|P|psi> for a single Pauli string, computed by applying P implicitly
/// (bit masks and phases) and taking the inner product; the 2^n x 2^n matrix
/// is never materialized. The result is real for Hermitian P; any residual
/// imaginary part beyond 1e-12 indicates a bug and throws.
inline double expectation_pauli(const Statevector& state,
                                const PauliString& pauli) {
  const int n = state.n_qubits();
  if (pauli.n_qubits() != n)
    throw std::invalid_argument("Pauli label " + pauli.label() +
                                " does not match statevector qubit count " +
                                std::to_string(n));

  std::uint64_t flip = 0;  // X and Y flip the qubit bit
  std::uint64_t sign = 0;  // Y and Z contribute (-1)^bit
  int y_count = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (pauli.op(q)) {
      case 'X': flip |= bit; break;
      case 'Y': flip |= bit; sign |= bit; ++y_count; break;
      case 'Z': sign |= bit; break;
      default: break;
    }
  }

  const auto& amps = state.amplitudes();
  std::complex<double> acc(0.0, 0.0);
  for (std::uint64_t j = 0; j < amps.size(); ++j) {
    const double s = (std::popcount(j & sign) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps[j ^ flip]) * (s * amps[j]);
  }
  // i^y_count: Y|b> = i(-1)^b |1-b>
  static constexpr std::complex<double> kIPow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  acc *= kIPow[y_count & 3];

  if (std::abs(acc.imag()) >= 1e-12)
    throw std::logic_error("Pauli expectation has non-real value");
  return acc.real();
}

/// Exact (infinite-shot) expectation of a Pauli sum: sum_k c_k <psi|P_k|psi>.
inline double expectation_sum(const Statevector& state, const PauliSum& h) {
  if (h.n_qubits() != state.n_qubits())
    throw std::invalid_argument("Hamiltonian qubit count " +
                                std::to_string(h.n_qubits()) +
                                " does not match statevector");
  double total = 0.0;
  for (const auto& term : h.terms())
    total += term.coefficient * expectation_pauli(state, term.pauli);
  return total;
}

/// Shot-noise model of the expectation estimate. Each non-identity term is
/// estimated from an independent Binomial(shots, (1+e_k)/2) draw of its exact
/// expectation e_k; identity terms contribute their coefficients exactly.
/// The estimator is unbiased with per-term variance c_k^2 (1-e_k^2)/shots.
/// Terms are sampled independently with the full shot count (no commuting
/// grouping) as an explicit modeling approximation.
inline double sampled_expectation(const Statevector& state, const PauliSum& h,
                                  long long shots, RandomStream& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (h.n_qubits() != state.n_qubits())
    throw std::invalid_argument("Hamiltonian qubit count " +
                                std::to_string(h.n_qubits()) +
                                " does not match statevector");
  double total = 0.0;
  for (const auto& term : h.terms()) {
    if (term.pauli.is_identity()) {
      total += term.coefficient;
      continue;
    }
    double e = expectation_pauli(state, term.pauli);
    e = std::min(1.0, std::max(-1.0, e));
    const long long k = rng.binomial(shots, 0.5 * (1.0 + e));
    const double estimate =
        2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0;
    total += term.coefficient * estimate;
  }
  return total;
}

}  // namespace hopso
