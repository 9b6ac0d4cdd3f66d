#include "qsim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qmuse::qsim {

namespace {
bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_finite_angle(double value, const char* name) {
  if (!std::isfinite(value))
    throw std::invalid_argument(std::string("non-finite gate angle: ") + name);
}
}  // namespace

GateMatrix::GateMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (!power_of_two(dim)) throw std::invalid_argument("gate dimension must be a power of two");
}

GateMatrix GateMatrix::identity(std::size_t dim) {
  GateMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

GateMatrix GateMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  GateMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.dim_) throw std::invalid_argument("gate matrix rows must be square");
    std::size_t c = 0;
    for (const Complex& v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

GateMatrix GateMatrix::dagger() const {
  GateMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

double GateMatrix::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) acc += std::conj(at(k, r)) * at(k, c);
      if (r == c) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("gate dimension mismatch in product");
  GateMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Complex arx = a.at(r, k);
      if (arx == Complex{}) continue;
      for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) += arx * b.at(k, c);
    }
  }
  return out;
}

GateMatrix tensor(const GateMatrix& a, const GateMatrix& b) {
  GateMatrix out(a.dim() * b.dim());
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac)
      for (std::size_t br = 0; br < b.dim(); ++br)
        for (std::size_t bc = 0; bc < b.dim(); ++bc)
          out.at(ar * b.dim() + br, ac * b.dim() + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

GateMatrix tensor_power(const GateMatrix& g, int n) {
  if (n < 1) throw std::invalid_argument("tensor_power needs n >= 1");
  GateMatrix out = g;
  for (int i = 1; i < n; ++i) out = tensor(out, g);
  return out;
}

GateMatrix gate_i() { return GateMatrix::identity(2); }

GateMatrix gate_h() {
  const double s = 1.0 / std::sqrt(2.0);
  return GateMatrix::from_rows({{s, s}, {s, -s}});
}

GateMatrix gate_x() { return GateMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

GateMatrix gate_z() { return GateMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

GateMatrix gate_rx(double theta) {
  require_finite_angle(theta, "theta");
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return GateMatrix::from_rows({{c, Complex(0.0, -s)}, {Complex(0.0, -s), c}});
}

GateMatrix gate_ry(double theta) {
  require_finite_angle(theta, "theta");
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return GateMatrix::from_rows({{c, -s}, {s, c}});
}

GateMatrix gate_rz(double phi) {
  require_finite_angle(phi, "phi");
  const Complex lo = std::polar(1.0, -phi / 2.0), hi = std::polar(1.0, phi / 2.0);
  return GateMatrix::from_rows({{lo, 0.0}, {0.0, hi}});
}

GateMatrix gate_u(double theta, double phi, double lambda) {
  require_finite_angle(theta, "theta");
  require_finite_angle(phi, "phi");
  require_finite_angle(lambda, "lambda");
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return GateMatrix::from_rows(
      {{c, -std::polar(1.0, lambda) * s},
       {std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c}});
}

bool equal_up_to_global_phase(const GateMatrix& a, const GateMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  // Find the largest entry of b to fix the relative phase.
  std::size_t ref = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    if (std::abs(b.entries()[i]) > best) {
      best = std::abs(b.entries()[i]);
      ref = i;
    }
  }
  if (best < tol) return true;  // both effectively zero
  const Complex phase = a.entries()[ref] / b.entries()[ref];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (std::abs(a.entries()[i] - phase * b.entries()[i]) > tol) return false;
  return true;
}

}  // namespace qmuse::qsim
