#pragma once

#include <optional>
#include <vector>

#include "qsim/circuit.hpp"
#include "qsim/state.hpp"
#include "rng.hpp"

namespace qmuse::bm {

// Phase oracle: a ±1 diagonal that flips the sign of every target basis
// state and leaves the rest untouched.
struct OracleMatrix {
  int n_qubits = 4;
  std::vector<double> diagonal;  // entries are +1 or -1

  std::vector<int> targets() const;
  qsim::GateMatrix to_matrix() const;
};

// Oracle from a binary successor row; rows shorter than 2^n leave the
// padding states (12-15 for the four-qubit note register) at +1.
OracleMatrix build_oracle(const std::vector<int>& target_row, int n_qubits = 4);

OracleMatrix oracle_for_targets(const std::vector<int>& targets, int n_qubits);

// Conditional shift: diag(1, -1, ..., -1) of dimension 2^n.
qsim::GateMatrix shift_operator(int n_qubits);

// Amplitude remixer U = H^{⊗n} S H^{⊗n}, the inversion about the mean.
struct Diffuser {
  int n_qubits = 0;
  qsim::GateMatrix matrix{1};
};

Diffuser diffuser(int n_qubits);

// max(1, floor(0.7854 * sqrt(2^n / T)))
int grover_iterations(int n_qubits, int n_targets);

// Analytic total target probability sin^2((2i+1) * asin(sqrt(T / 2^n))).
double target_probability(int n_qubits, int n_targets, int iterations);

struct GroverConfig {
  int shots = 40;
  rng::Seed seed;
  std::optional<int> iteration_override;
  int threads = 1;
};

struct SelectionResult {
  int winner = 0;
  qsim::Histogram histogram;
  int iterations_used = 0;
  // Set when the majority vote landed outside the target set twice and the
  // best in-target outcome was taken instead.
  bool fallback_used = false;
};

// Exact state after `iterations` oracle+diffuser rounds on the uniform
// superposition.
qsim::StateVector grover_final_state(const OracleMatrix& oracle, int iterations);

// Uniform superposition, `iterations` rounds of oracle followed by
// diffuser, then `shots` samples; the winner is the most frequent outcome
// with ties resolved to the smallest state index.
SelectionResult grover_run(const OracleMatrix& oracle, const GroverConfig& config);

// The two-qubit walkthrough: amplitudes after every stage of one
// oracle+diffuser round on the uniform superposition, for the |01⟩ target.
struct DemoChain {
  std::vector<qsim::StateVector> stages;  // phi1..phi5
  double delta_uniform = 0.0;             // δ of the balanced state
  double delta_marked = 0.0;              // δ after the oracle
  std::vector<double> final_probabilities;
};

DemoChain grover_demo_chain();

}  // namespace qmuse::bm
