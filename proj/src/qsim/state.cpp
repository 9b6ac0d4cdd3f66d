#include "qsim/state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmuse::qsim {

namespace {
constexpr double kNormTol = 1e-9;

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
}

void check_state(const std::vector<Complex>& amps, double norm_sq) {
  for (const Complex& a : amps)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::runtime_error("state vector contains a non-finite amplitude");
  if (std::abs(norm_sq - 1.0) > kNormTol)
    throw std::runtime_error("state vector is not normalized");
}
}  // namespace

StateVector::StateVector(int n_qubits, std::size_t basis_index) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (basis_index >= dim) throw std::invalid_argument("basis index out of range");
  amplitudes_.assign(dim, Complex{});
  amplitudes_[basis_index] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("amplitude vector length must be 2^n");
  check_state(amplitudes_, norm_squared());
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const Complex& a : amplitudes_) acc += std::norm(a);
  return acc;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> out(amplitudes_.size());
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) out[i] = std::norm(amplitudes_[i]);
  return out;
}

StateVector new_state(int n_qubits, std::size_t basis_index) {
  return StateVector(n_qubits, basis_index);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_count(n);
  std::vector<Complex> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = a.amplitudes()[i] * b.amplitudes()[j];
  return StateVector(n, std::move(out));
}

StateVector apply_matrix(const StateVector& state, const GateMatrix& full_unitary) {
  if (full_unitary.dim() != state.size())
    throw std::invalid_argument("matrix dimension does not match the state");
  if (full_unitary.dim() > kMaxDenseDim)
    throw std::invalid_argument("dense matrix application is limited to 5 qubits");
  if (!full_unitary.is_unitary(1e-10))
    throw std::invalid_argument("matrix is not unitary");

  std::vector<Complex> out(state.size());
  for (std::size_t r = 0; r < state.size(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < state.size(); ++c)
      acc += full_unitary.at(r, c) * state.amplitudes()[c];
    out[r] = acc;
  }
  return StateVector(state.n_qubits(), std::move(out));
}

double mean_squared_amplitude(const StateVector& state) {
  Complex sum = 0.0;
  for (const Complex& a : state.amplitudes()) sum += a;
  return std::abs(sum) / (2.0 * static_cast<double>(state.size()));
}

std::string debug_json(const StateVector& state) {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) out << ",";
    out << "[" << state.amplitudes()[i].real() << "," << state.amplitudes()[i].imag()
        << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace qmuse::qsim
