#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "hopso/statevector.hpp"

namespace hopso {

/// Hardware-efficient ansatz: `reps` blocks of [rotation layer; linear CNOT
/// chain] followed by one final rotation layer. A rotation layer applies
/// RY(theta) then RZ(phi) on every qubit; the CNOT chain entangles qubit i
/// with qubit i+1 for i = 0..n-2.
///
/// Parameters bind layer-major, qubit-minor, RY before RZ:
///   index(layer, qubit, gate) = (layer * n_qubits + qubit) * 2 + gate
/// with gate 0 = RY and gate 1 = RZ, layer = 0..reps.
struct AnsatzSpec {
  int n_qubits = 1;
  int reps = 0;
};

inline int num_parameters(const AnsatzSpec& spec) {
  if (spec.n_qubits < 1 || spec.reps < 0)
    throw std::invalid_argument("invalid ansatz spec");
  return (spec.reps + 1) * 2 * spec.n_qubits;
}

/// Maps a parameter vector to the trial state, starting from |0...0>.
/// Two calls with equal inputs produce bit-identical amplitude vectors.
inline Statevector prepare_state(const AnsatzSpec& spec,
                                 std::span<const double> params) {
  const int expected = num_parameters(spec);
  if (static_cast<int>(params.size()) != expected)
    throw std::invalid_argument(
        "parameter count " + std::to_string(params.size()) +
        " does not match ansatz requirement " + std::to_string(expected));

  Statevector state(spec.n_qubits);
  std::size_t p = 0;
  auto rotation_layer = [&] {
    for (int q = 0; q < spec.n_qubits; ++q) {
      apply_gate(state, GateOp::ry(q, params[p++]));
      apply_gate(state, GateOp::rz(q, params[p++]));
    }
  };
  for (int layer = 0; layer < spec.reps; ++layer) {
    rotation_layer();
    for (int q = 0; q + 1 < spec.n_qubits; ++q)
      apply_gate(state, GateOp::cnot(q, q + 1));
  }
  rotation_layer();
  return state;
}

}  // namespace hopso
