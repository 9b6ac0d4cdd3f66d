#include "bm/grover.hpp"

#include <cmath>
#include <stdexcept>

namespace qmuse::bm {

namespace {

qsim::StateVector uniform_state(int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<qsim::Complex> amps(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return qsim::StateVector(n_qubits, std::move(amps));
}

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5)
    throw std::invalid_argument("oracle register must be 1-5 qubits");
}

}  // namespace

std::vector<int> OracleMatrix::targets() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    if (diagonal[i] < 0.0) out.push_back(static_cast<int>(i));
  return out;
}

qsim::GateMatrix OracleMatrix::to_matrix() const {
  qsim::GateMatrix m(diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m.at(i, i) = diagonal[i];
  return m;
}

OracleMatrix build_oracle(const std::vector<int>& target_row, int n_qubits) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (target_row.size() > dim)
    throw std::invalid_argument("target row is longer than the register");

  OracleMatrix oracle;
  oracle.n_qubits = n_qubits;
  oracle.diagonal.assign(dim, 1.0);
  bool any = false;
  for (std::size_t i = 0; i < target_row.size(); ++i) {
    if (target_row[i] == 0) continue;
    if (target_row[i] != 1) throw std::invalid_argument("target row entries must be 0 or 1");
    oracle.diagonal[i] = -1.0;
    any = true;
  }
  if (!any) throw std::invalid_argument("oracle needs at least one target state");
  return oracle;
}

OracleMatrix oracle_for_targets(const std::vector<int>& targets, int n_qubits) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<int> row(dim, 0);
  for (int t : targets) {
    if (t < 0 || static_cast<std::size_t>(t) >= dim)
      throw std::invalid_argument("target index out of range");
    row[static_cast<std::size_t>(t)] = 1;
  }
  return build_oracle(row, n_qubits);
}

qsim::GateMatrix shift_operator(int n_qubits) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  qsim::GateMatrix m(dim);
  m.at(0, 0) = 1.0;
  for (std::size_t i = 1; i < dim; ++i) m.at(i, i) = -1.0;  // e^{iπ}
  return m;
}

Diffuser diffuser(int n_qubits) {
  check_qubits(n_qubits);
  const qsim::GateMatrix h_n = qsim::tensor_power(qsim::gate_h(), n_qubits);
  return Diffuser{n_qubits, h_n * shift_operator(n_qubits) * h_n};
}

int grover_iterations(int n_qubits, int n_targets) {
  check_qubits(n_qubits);
  const int dim = 1 << n_qubits;
  if (n_targets < 1 || n_targets > dim)
    throw std::invalid_argument("target count must be in [1, 2^n]");
  const int i = static_cast<int>(
      std::floor(0.7854 * std::sqrt(static_cast<double>(dim) / n_targets)));
  return std::max(1, i);
}

double target_probability(int n_qubits, int n_targets, int iterations) {
  check_qubits(n_qubits);
  const double dim = static_cast<double>(1 << n_qubits);
  if (n_targets < 1 || n_targets > dim)
    throw std::invalid_argument("target count must be in [1, 2^n]");
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  const double theta = std::asin(std::sqrt(n_targets / dim));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

qsim::StateVector grover_final_state(const OracleMatrix& oracle, int iterations) {
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  const qsim::GateMatrix oracle_matrix = oracle.to_matrix();
  const qsim::GateMatrix remix = diffuser(oracle.n_qubits).matrix;
  qsim::StateVector state = uniform_state(oracle.n_qubits);
  for (int i = 0; i < iterations; ++i) {
    state = qsim::apply_matrix(state, oracle_matrix);
    state = qsim::apply_matrix(state, remix);
  }
  return state;
}

SelectionResult grover_run(const OracleMatrix& oracle, const GroverConfig& config) {
  if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
  const int iterations = config.iteration_override
                             ? *config.iteration_override
                             : grover_iterations(oracle.n_qubits,
                                                 static_cast<int>(oracle.targets().size()));
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");

  const qsim::StateVector state = grover_final_state(oracle, iterations);
  std::vector<int> measured(oracle.n_qubits);
  for (int q = 0; q < oracle.n_qubits; ++q) measured[q] = q;

  SelectionResult result;
  result.iterations_used = iterations;
  result.histogram =
      qsim::sample_histogram(state, measured, static_cast<std::uint64_t>(config.shots),
                             config.seed, config.threads);
  result.winner = static_cast<int>(qsim::majority_outcome(result.histogram));
  return result;
}

DemoChain grover_demo_chain() {
  const OracleMatrix oracle = oracle_for_targets({1}, 2);  // target |01⟩
  const qsim::GateMatrix h2 = qsim::tensor_power(qsim::gate_h(), 2);
  const qsim::GateMatrix shift = shift_operator(2);

  DemoChain chain;
  chain.stages.push_back(uniform_state(2));                                  // phi1
  chain.stages.push_back(qsim::apply_matrix(chain.stages[0], oracle.to_matrix()));  // phi2
  chain.stages.push_back(qsim::apply_matrix(chain.stages[1], h2));           // phi3
  chain.stages.push_back(qsim::apply_matrix(chain.stages[2], shift));        // phi4
  chain.stages.push_back(qsim::apply_matrix(chain.stages[3], h2));           // phi5
  chain.delta_uniform = qsim::mean_squared_amplitude(chain.stages[0]);
  chain.delta_marked = qsim::mean_squared_amplitude(chain.stages[1]);
  chain.final_probabilities = chain.stages.back().probabilities();
  return chain;
}

}  // namespace qmuse::bm
