#pragma once

#include <stdexcept>
#include <string>

namespace quartet {

// Bad or malformed input: dimensions, parse failures, invariant violations.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cost table with M == m: every tree is optimal and S(T) is undefined.
struct degenerate_table_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration requested above the configured cap.
struct cap_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quartet
