#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

// Error taxonomy: bad inputs / invalid parameter combinations, numerical
// failures (eigensolver non-convergence and the like), and physically
// inconsistent states (positivity violations beyond tolerance).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xxz
