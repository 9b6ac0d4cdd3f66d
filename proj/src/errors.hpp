#pragma once

#include <stdexcept>
#include <string>

namespace qmuse {

// File-system failures, kept distinct from argument errors so callers can
// map them to a separate exit code.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmuse
