#pragma once

#include <string>
#include <string_view>

namespace qmuse::qwalk {

// Vertex of the 3-cube walked by the pitch/rhythm engines. The code integer
// stores qubit q_k in bit k; display strings list q0 first ("011" means
// q0=0, q1=1, q2=1), matching the walk-trace convention. Quantum toolkits
// usually print registers in the reverse order.
struct CubeVertex {
  int code = 0;

  static CubeVertex from_code(int code);
  static CubeVertex from_string(std::string_view text);

  std::string to_string() const;
  CubeVertex with_flipped(int qubit) const;
  int hamming_distance(CubeVertex other) const;

  bool operator==(const CubeVertex&) const = default;
};

}  // namespace qmuse::qwalk
