#pragma once

#include <sstream>
#include <string>

namespace qmuse {

// Compact, deterministic number formatting for text and CSV output:
// integers print without a decimal point, dyadic fractions exactly.
inline std::string format_number(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

}  // namespace qmuse
