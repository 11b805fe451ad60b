#pragma once

#include <stdexcept>
#include <string>

namespace dvb {

/// Thrown when an operation is handed data outside its domain: dimension
/// mismatches, elements over different base points, undefined sums.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

}  // namespace dvb
