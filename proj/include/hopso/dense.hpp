#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hopso/pauli.hpp"

namespace hopso {

/// Row-major square complex matrix, just large enough for the dense
/// diagonalization paths (2^n x 2^n with n <= 12).
struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  explicit ComplexMatrix(int size)
      : n(size), a(static_cast<std::size_t>(size) * size, {0.0, 0.0}) {}

  std::complex<double>& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * n + j];
  }
  const std::complex<double>& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

/// Builds sum_k c_k (tensor product of sigma(label_k[i]) over qubits i) as a
/// dense Hermitian matrix under the qubit-0-is-LSB convention. Guarded to
/// n_qubits <= 12.
inline ComplexMatrix dense_matrix(const PauliSum& h) {
  if (h.n_qubits() > 12)
    throw std::length_error("dense_matrix limited to 12 qubits, got " +
                            std::to_string(h.n_qubits()));
  const int dim = 1 << h.n_qubits();
  ComplexMatrix m(dim);
  for (const auto& term : h.terms()) {
    std::uint64_t flip = 0, sign = 0;
    int y_count = 0;
    for (int q = 0; q < h.n_qubits(); ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (term.pauli.op(q)) {
        case 'X': flip |= bit; break;
        case 'Y': flip |= bit; sign |= bit; ++y_count; break;
        case 'Z': sign |= bit; break;
        default: break;
      }
    }
    static constexpr std::complex<double> kIPow[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    // P|j> = i^{#Y} (-1)^{popcount(j & sign)} |j ^ flip>
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(dim); ++j) {
      const double s = (std::popcount(j & sign) & 1) ? -1.0 : 1.0;
      m.at(static_cast<int>(j ^ flip), static_cast<int>(j)) +=
          term.coefficient * s * kIPow[y_count & 3];
    }
  }
  return m;
}

/// All eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi sweeps
/// with unitary 2x2 rotations. Convergence is declared once the off-diagonal
/// Frobenius norm falls below 1e-12 (or its roundoff floor for large norms);
/// exceeding the sweep cap throws.
inline std::vector<double> jacobi_eigenvalues(ComplexMatrix m,
                                              int max_sweeps = 100) {
  const int n = m.n;
  if (n == 1) return {m.at(0, 0).real()};

  double fro = 0.0;
  for (const auto& v : m.a) fro += std::norm(v);
  fro = std::sqrt(fro);
  const double tol = std::max(1e-12, 1e-15 * fro);

  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += std::norm(m.at(p, q));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() < tol) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = m.at(i, i).real();
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> apq = m.at(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const std::complex<double> w = std::conj(apq) / b;  // b = apq * w
        const double app = m.at(p, p).real();
        const double aqq = m.at(q, q).real();

        // Real Jacobi rotation for [[app, b], [b, aqq]].
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Unitary U: identity except U[p][p]=c, U[p][q]=s,
        // U[q][p]=-s*w, U[q][q]=c*w. Apply A <- U^H A U.
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const std::complex<double> akp = m.at(k, p);
          const std::complex<double> akq = m.at(k, q);
          m.at(k, p) = c * akp - s * w * akq;
          m.at(k, q) = s * akp + c * w * akq;
          m.at(p, k) = std::conj(m.at(k, p));
          m.at(q, k) = std::conj(m.at(k, q));
        }
        m.at(p, p) = app - t * b;
        m.at(q, q) = aqq + t * b;
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
      }
    }
  }
  throw std::runtime_error("jacobi_eigenvalues: no convergence after " +
                           std::to_string(max_sweeps) + " sweeps");
}

/// Smallest eigenvalue of dense_matrix(h). Accurate to better than 1e-9 for
/// the sizes admitted by the guard.
inline double ground_state_energy(const PauliSum& h) {
  return jacobi_eigenvalues(dense_matrix(h)).front();
}

}  // namespace hopso
