#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsim/gates.hpp"

namespace qmuse::qsim {

// Hard cap on register width; everything in this library is desk-scale.
inline constexpr int kMaxQubits = 8;

// Dense applications of arbitrary full-register matrices are limited to
// five qubits (32 amplitudes).
inline constexpr std::size_t kMaxDenseDim = 32;

// Basis ordering is little-endian: bit k of a state index is qubit q_k,
// so |q1 q0⟩ = |01⟩ sits at index 1.
class StateVector {
 public:
  // Computational basis state |basis_index⟩ on n qubits.
  explicit StateVector(int n_qubits, std::size_t basis_index = 0);

  // Takes ownership of a pre-built amplitude vector; must be normalized.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }

  double norm_squared() const;
  std::vector<double> probabilities() const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

StateVector new_state(int n_qubits, std::size_t basis_index);

// Kronecker product of registers; the left operand becomes the high qubits,
// so tensor(|0⟩, |1⟩) = |01⟩ = (0, 1, 0, 0).
StateVector tensor(const StateVector& a, const StateVector& b);

// Full 2^n × 2^n unitary applied as a matrix-vector product. The matrix is
// checked for unitarity (tolerance 1e-10) and dimension (≤ 32) up front.
StateVector apply_matrix(const StateVector& state, const GateMatrix& full_unitary);

// δ diagnostic used by the Grover walkthrough: half the magnitude of the
// average amplitude. A balanced two-qubit superposition gives 0.25 and a
// single sign flip halves that to 0.125.
double mean_squared_amplitude(const StateVector& state);

// Statevector as a JSON array of [re, im] pairs (debug dump).
std::string debug_json(const StateVector& state);

}  // namespace qmuse::qsim
