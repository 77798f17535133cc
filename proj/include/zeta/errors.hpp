#pragma once

#include <stdexcept>
#include <string>

namespace zeta {

// Malformed input (bad JSON, unparseable rational, ...). CLI exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated precondition does not hold; the message names the violated
// inequality or property. CLI exit code 3.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant was breached; indicates a bug. CLI exit code 4.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& violated) {
  if (!ok) throw precondition_error(violated);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw invariant_error(what);
}

}  // namespace zeta
