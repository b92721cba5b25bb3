#pragma once

#include <stdexcept>

namespace jumpsync {

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes: schema/config/argument -> 2, constraint -> 3, numerical -> 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace jumpsync
