#include "qsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qmuse::qsim {

namespace {

void check_indices(int n_qubits, const std::vector<int>& targets,
                   const std::vector<int>& controls) {
  std::vector<int> all(targets);
  all.insert(all.end(), controls.begin(), controls.end());
  for (int q : all)
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("qubit index out of range");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("target and control indices must be distinct");
}

}  // namespace

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("circuit qubit count must be in [1, 8]");
}

Circuit& Circuit::append(GateMatrix gate, std::vector<int> targets,
                         std::vector<int> controls) {
  check_indices(n_qubits_, targets, controls);
  if (gate.dim() != (std::size_t{1} << targets.size()))
    throw std::invalid_argument("gate dimension does not match target count");
  ops_.push_back(CircuitOp{std::move(gate), std::move(targets), std::move(controls)});
  return *this;
}

Circuit& Circuit::h(int q) { return append(gate_h(), {q}); }
Circuit& Circuit::x(int q) { return append(gate_x(), {q}); }
Circuit& Circuit::z(int q) { return append(gate_z(), {q}); }
Circuit& Circuit::rz(int q, double phi) { return append(gate_rz(phi), {q}); }
Circuit& Circuit::cx(int control, int target) {
  return append(gate_x(), {target}, {control});
}
Circuit& Circuit::cz(int control, int target) {
  return append(gate_z(), {target}, {control});
}
Circuit& Circuit::ccx(int control_a, int control_b, int target) {
  return append(gate_x(), {target}, {control_a, control_b});
}

Circuit& Circuit::measure(std::vector<int> qubits) {
  check_indices(n_qubits_, qubits, {});
  measured_ = std::move(qubits);
  return *this;
}

Circuit& Circuit::measure_all() {
  measured_.resize(n_qubits_);
  for (int q = 0; q < n_qubits_; ++q) measured_[q] = q;
  return *this;
}

StateVector apply(const StateVector& state, const CircuitOp& op) {
  check_indices(state.n_qubits(), op.targets, op.controls);
  const std::size_t block = std::size_t{1} << op.targets.size();
  if (op.gate.dim() != block)
    throw std::invalid_argument("gate dimension does not match target count");

  std::size_t control_mask = 0;
  for (int q : op.controls) control_mask |= std::size_t{1} << q;
  std::size_t target_mask = 0;
  for (int q : op.targets) target_mask |= std::size_t{1} << q;

  // Scatter a gate-local index onto the global target bits.
  const auto spread = [&](std::size_t local) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < op.targets.size(); ++j)
      if (local & (std::size_t{1} << j)) out |= std::size_t{1} << op.targets[j];
    return out;
  };

  std::vector<Complex> out(state.amplitudes());
  for (std::size_t base = 0; base < state.size(); ++base) {
    if (base & target_mask) continue;                         // not a block base
    if ((base & control_mask) != control_mask) continue;      // controls not set
    for (std::size_t r = 0; r < block; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < block; ++c)
        acc += op.gate.at(r, c) * state.amplitudes()[base | spread(c)];
      out[base | spread(r)] = acc;
    }
  }
  return StateVector(state.n_qubits(), std::move(out));
}

StateVector final_state(const Circuit& circuit) {
  StateVector state(circuit.n_qubits(), 0);
  for (const CircuitOp& op : circuit.ops()) state = apply(state, op);
  return state;
}

GateMatrix circuit_unitary(const Circuit& circuit) {
  const std::size_t dim = std::size_t{1} << circuit.n_qubits();
  if (dim > kMaxDenseDim)
    throw std::invalid_argument("circuit_unitary is limited to 5 qubits");
  GateMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector state(circuit.n_qubits(), col);
    for (const CircuitOp& op : circuit.ops()) state = apply(state, op);
    for (std::size_t row = 0; row < dim; ++row) u.at(row, col) = state.amplitudes()[row];
  }
  return u;
}

std::vector<double> measured_probabilities(const StateVector& state,
                                           const std::vector<int>& measured) {
  if (measured.empty()) throw std::invalid_argument("measurement set is empty");
  check_indices(state.n_qubits(), measured, {});
  std::vector<double> probs(std::size_t{1} << measured.size(), 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < measured.size(); ++j)
      if (i & (std::size_t{1} << measured[j])) key |= std::size_t{1} << j;
    probs[key] += std::norm(state.amplitudes()[i]);
  }
  return probs;
}

Histogram sample_histogram(const StateVector& state, const std::vector<int>& measured,
                           std::uint64_t shots, rng::Seed seed, int threads) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");

  const std::vector<double> probs = measured_probabilities(state, measured);
  std::vector<double> cumulative(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cumulative[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-9)
    throw std::runtime_error("measured probabilities do not sum to 1");

  const auto sample_range = [&](std::uint64_t first, std::uint64_t last,
                                std::vector<std::uint64_t>& counts) {
    for (std::uint64_t s = first; s < last; ++s) {
      rng::Xoshiro256 gen(rng::splitmix64_mix(seed.master ^ s));
      const double u = gen.next_double() * acc;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      std::size_t outcome = static_cast<std::size_t>(it - cumulative.begin());
      if (outcome >= counts.size()) outcome = counts.size() - 1;
      ++counts[outcome];
    }
  };

  std::vector<std::uint64_t> counts(probs.size(), 0);
  const std::uint64_t per_thread =
      std::max<std::uint64_t>(1, shots / static_cast<std::uint64_t>(threads));
  if (threads == 1 || shots < 2 * per_thread) {
    sample_range(0, shots, counts);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(
        threads, std::vector<std::uint64_t>(probs.size(), 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t first = per_thread * static_cast<std::uint64_t>(t);
      const std::uint64_t last = (t + 1 == threads) ? shots : first + per_thread;
      pool.emplace_back(sample_range, first, std::min(last, shots),
                        std::ref(partial[t]));
    }
    for (auto& worker : pool) worker.join();
    for (const auto& local : partial)
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
  }

  Histogram hist;
  hist.shots = shots;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i]) hist.counts[i] = counts[i];
  return hist;
}

Histogram run(const Circuit& circuit, std::uint64_t shots, rng::Seed seed, int threads) {
  if (circuit.measured().empty())
    throw std::invalid_argument("circuit has no measured qubits");
  return sample_histogram(final_state(circuit), circuit.measured(), shots, seed,
                          threads);
}

std::uint64_t majority_outcome(const Histogram& histogram) {
  if (histogram.counts.empty()) throw std::invalid_argument("empty histogram");
  std::uint64_t best_key = 0, best_count = 0;
  for (const auto& [key, count] : histogram.counts) {
    if (count > best_count) {  // map order makes ties resolve to the smallest key
      best_count = count;
      best_key = key;
    }
  }
  return best_key;
}

std::optional<std::uint64_t> strict_majority_outcome(const Histogram& histogram) {
  if (histogram.counts.empty()) throw std::invalid_argument("empty histogram");
  std::uint64_t best_key = 0, best_count = 0;
  bool tied = false;
  for (const auto& [key, count] : histogram.counts) {
    if (count > best_count) {
      best_count = count;
      best_key = key;
      tied = false;
    } else if (count == best_count) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return best_key;
}

}  // namespace qmuse::qsim
