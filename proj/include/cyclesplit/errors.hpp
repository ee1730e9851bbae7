#pragma once

#include <stdexcept>
#include <string>

namespace cyclesplit {

// Malformed or out-of-contract input (bad file, unknown vertex, invalid cycle, ...).
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation was refused because it would exceed a configured resource cap
// (vertex count, subset count, face count, generator count). Exit code 3.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclesplit
