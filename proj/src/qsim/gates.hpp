#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qmuse::qsim {

using Complex = std::complex<double>;

// Dense square complex matrix with power-of-two dimension. Gate factories
// below produce exact unitaries; arbitrary entries can be supplied through
// from_rows, which is validated wherever a matrix is applied to a state.
class GateMatrix {
 public:
  explicit GateMatrix(std::size_t dim);  // zero-filled

  static GateMatrix identity(std::size_t dim);
  static GateMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  GateMatrix dagger() const;

  // max_ij |(G†G − I)_ij|
  double unitarity_error() const;
  bool is_unitary(double tol = 1e-12) const { return unitarity_error() < tol; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;  // row-major
};

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);

// Kronecker product; the left operand occupies the more significant qubits,
// so tensor(A, B) acts as A on the high bits and B on the low bits.
GateMatrix tensor(const GateMatrix& a, const GateMatrix& b);
GateMatrix tensor_power(const GateMatrix& g, int n);

// Standard one-qubit gates. Angles are radians and must be finite.
GateMatrix gate_i();
GateMatrix gate_h();
GateMatrix gate_x();
GateMatrix gate_z();
GateMatrix gate_rx(double theta);
GateMatrix gate_ry(double theta);
GateMatrix gate_rz(double phi);
GateMatrix gate_u(double theta, double phi, double lambda);

// True when a == c·b for some unit-modulus scalar c.
bool equal_up_to_global_phase(const GateMatrix& a, const GateMatrix& b,
                              double tol = 1e-12);

}  // namespace qmuse::qsim
