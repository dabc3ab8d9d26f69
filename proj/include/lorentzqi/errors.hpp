#pragma once

#include <stdexcept>
#include <string>

namespace lorentzqi {

// Malformed arguments: bad dimensions, out-of-range indices, unparsable tokens.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical invariant (Hermiticity, trace, positivity, convergence) failed
// beyond tolerance.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lorentzqi
