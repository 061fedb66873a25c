#pragma once

#include <stdexcept>
#include <string>

namespace csense {

/// Precondition violation: bad arguments, malformed input files.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical hard error: tolerance miscalibration, oracle disagreement,
/// failed realification.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration budget refusal; clear with the force flag.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace csense
