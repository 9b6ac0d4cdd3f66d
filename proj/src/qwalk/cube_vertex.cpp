#include "qwalk/cube_vertex.hpp"

#include <bit>
#include <stdexcept>

namespace qmuse::qwalk {

CubeVertex CubeVertex::from_code(int code) {
  if (code < 0 || code > 7) throw std::invalid_argument("vertex code must be in [0, 7]");
  return CubeVertex{code};
}

CubeVertex CubeVertex::from_string(std::string_view text) {
  if (text.size() != 3)
    throw std::invalid_argument("vertex code must be three binary digits, e.g. 011");
  int code = 0;
  for (int k = 0; k < 3; ++k) {
    if (text[k] == '1')
      code |= 1 << k;
    else if (text[k] != '0')
      throw std::invalid_argument("vertex code must be three binary digits, e.g. 011");
  }
  return CubeVertex{code};
}

std::string CubeVertex::to_string() const {
  std::string out(3, '0');
  for (int k = 0; k < 3; ++k)
    if (code & (1 << k)) out[k] = '1';
  return out;
}

CubeVertex CubeVertex::with_flipped(int qubit) const {
  if (qubit < 0 || qubit > 2) throw std::invalid_argument("cube qubit must be 0, 1 or 2");
  return CubeVertex{code ^ (1 << qubit)};
}

int CubeVertex::hamming_distance(CubeVertex other) const {
  return std::popcount(static_cast<unsigned>(code ^ other.code));
}

}  // namespace qmuse::qwalk
