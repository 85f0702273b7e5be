// Test-only oracles, deliberately independent of the library's
// implementation paths: expectations via explicit Kronecker-product matrices
// and dense matrix-vector circuit simulation; smallest eigenvalues via
// characteristic-polynomial roots (Faddeev-LeVerrier coefficients,
// Durand-Kerner root finding).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hopso/pauli.hpp"
#include "hopso/statevector.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Mat = std::vector<std::vector<Complex>>;
using Vec = std::vector<Complex>;

inline Mat zeros(int n) { return Mat(n, std::vector<Complex>(n, {0.0, 0.0})); }

inline Mat identity(int n) {
  Mat m = zeros(n);
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  Mat out = zeros(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  const int n = static_cast<int>(a.size());
  Vec out(n, {0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += a[i][j] * x[j];
  return out;
}

inline Mat sigma(char op) {
  switch (op) {
    case 'I': return {{1.0, 0.0}, {0.0, 1.0}};
    case 'X': return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y': return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
    case 'Z': return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw std::invalid_argument("bad Pauli char");
}

// Tensor product with qubit 0 as the least significant index bit: the
// highest-index qubit is the leftmost Kronecker factor.
inline Mat pauli_matrix(const hopso::PauliString& p) {
  Mat m{{1.0}};
  for (int q = p.n_qubits() - 1; q >= 0; --q) m = kron(m, sigma(p.op(q)));
  return m;
}

inline Mat pauli_sum_matrix(const hopso::PauliSum& h) {
  Mat m = zeros(1 << h.n_qubits());
  for (const auto& term : h.terms()) {
    Mat p = pauli_matrix(term.pauli);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        m[i][j] += term.coefficient * p[i][j];
  }
  return m;
}

// Full 2^n x 2^n unitary of a single gate.
inline Mat gate_matrix(const hopso::GateOp& g, int n_qubits) {
  using hopso::GateKind;
  if (g.kind == GateKind::CNOT) {
    const int dim = 1 << n_qubits;
    Mat m = zeros(dim);
    for (int j = 0; j < dim; ++j) {
      const int row = (j >> g.control) & 1 ? j ^ (1 << g.target) : j;
      m[row][j] = 1.0;
    }
    return m;
  }
  Mat two(2, std::vector<Complex>(2));
  const double half = 0.5 * g.angle;
  if (g.kind == GateKind::RY) {
    two = {{std::cos(half), -std::sin(half)}, {std::sin(half), std::cos(half)}};
  } else {
    two = {{std::polar(1.0, -half), 0.0}, {0.0, std::polar(1.0, half)}};
  }
  Mat m{{1.0}};
  for (int q = n_qubits - 1; q >= 0; --q)
    m = kron(m, q == g.target ? two : identity(2));
  return m;
}

// Runs a circuit by dense matrix-vector products from |0...0>.
inline Vec run_circuit(const std::vector<hopso::GateOp>& gates, int n_qubits) {
  Vec state(std::size_t{1} << n_qubits, {0.0, 0.0});
  state[0] = 1.0;
  for (const auto& g : gates) state = matvec(gate_matrix(g, n_qubits), state);
  return state;
}

inline Complex inner(const Vec& a, const Vec& b) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double expectation(const Vec& state, const Mat& m) {
  return inner(state, matvec(m, state)).real();
}

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// p(x) = x^n + c[n-1] x^(n-1) + ... + c[0].
inline std::vector<Complex> char_poly(const Mat& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Complex> coeff(n + 1, Complex{0.0, 0.0});
  coeff[n] = 1.0;
  Mat m = identity(n);  // M_1
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {  // M_k = A M_{k-1} + c_{n-k+1} I
      m = matmul(a, m);
      for (int i = 0; i < n; ++i) m[i][i] += coeff[n - k + 1];
    }
    Mat prod = matmul(a, m);
    Complex tr{0.0, 0.0};
    for (int i = 0; i < n; ++i) tr += prod[i][i];
    coeff[n - k] = -tr / static_cast<double>(k);
  }
  return coeff;
}

// All polynomial roots via Durand-Kerner iteration.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& coeff) {
  const int deg = static_cast<int>(coeff.size()) - 1;
  auto eval = [&](Complex z) {
    Complex acc = coeff[deg];
    for (int i = deg - 1; i >= 0; --i) acc = acc * z + coeff[i];
    return acc;
  };
  double bound = 0.0;
  for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(coeff[i]));
  bound = 1.0 + bound;

  std::vector<Complex> z(deg);
  const Complex seedbase(0.4, 0.9);
  Complex cur(1.0, 0.0);
  for (int i = 0; i < deg; ++i) {
    cur *= seedbase;
    z[i] = bound * cur;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= z[i] - z[j];
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-14) break;
  }
  return z;
}

// Smallest eigenvalue of a Hermitian matrix via characteristic-polynomial
// roots. All roots are real for Hermitian input; a residual imaginary part
// beyond tolerance throws.
inline double char_poly_smallest_eigenvalue(const Mat& a) {
  auto roots = poly_roots(char_poly(a));
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) {
    if (std::abs(r.imag()) > 1e-7)
      throw std::runtime_error("char-poly oracle: non-real eigenvalue");
    smallest = std::min(smallest, r.real());
  }
  return smallest;
}

}  // namespace oracle
