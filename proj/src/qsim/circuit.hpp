#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/state.hpp"
#include "rng.hpp"

namespace qmuse::qsim {

// One gate application: `gate` has dimension 2^targets.size(); bit j of the
// gate's own index space corresponds to targets[j]. The gate fires only on
// basis states where every control qubit is |1⟩.
struct CircuitOp {
  GateMatrix gate;
  std::vector<int> targets;
  std::vector<int> controls;
};

struct Histogram {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
};

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<CircuitOp>& ops() const noexcept { return ops_; }
  const std::vector<int>& measured() const noexcept { return measured_; }

  Circuit& append(GateMatrix gate, std::vector<int> targets,
                  std::vector<int> controls = {});

  Circuit& h(int q);
  Circuit& x(int q);
  Circuit& z(int q);
  Circuit& rz(int q, double phi);
  Circuit& cx(int control, int target);
  Circuit& cz(int control, int target);
  Circuit& ccx(int control_a, int control_b, int target);

  Circuit& measure(std::vector<int> qubits);
  Circuit& measure_all();

 private:
  int n_qubits_;
  std::vector<CircuitOp> ops_;
  std::vector<int> measured_;
};

// Controlled-gate application as the full 2^n unitary would act; norm is
// checked after every op.
StateVector apply(const StateVector& state, const CircuitOp& op);

// State after running every op on |0…0⟩.
StateVector final_state(const Circuit& circuit);

// Full unitary of a circuit, built column-by-column from basis states.
GateMatrix circuit_unitary(const Circuit& circuit);

// Marginal distribution of the measured qubits: entry k is the probability
// of the outcome whose bit j equals the value of measured[j].
std::vector<double> measured_probabilities(const StateVector& state,
                                           const std::vector<int>& measured);

// Draws `shots` independent samples from the exact marginal distribution.
// Shot s uses its own generator seeded with splitmix64(seed.master ^ s), so
// the histogram does not depend on evaluation order; `threads` > 1 splits
// the shot range without changing the result.
Histogram sample_histogram(const StateVector& state, const std::vector<int>& measured,
                           std::uint64_t shots, rng::Seed seed, int threads = 1);

// Builds the final statevector once, then samples the measured qubits.
Histogram run(const Circuit& circuit, std::uint64_t shots, rng::Seed seed,
              int threads = 1);

// Most frequent outcome; ties resolve to the smallest key.
std::uint64_t majority_outcome(const Histogram& histogram);

// Most frequent outcome, or nullopt when the maximum count is shared.
std::optional<std::uint64_t> strict_majority_outcome(const Histogram& histogram);

}  // namespace qmuse::qsim
