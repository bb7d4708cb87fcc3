#pragma once

#include <stdexcept>
#include <string>

namespace motcsm {

// Malformed input data or a violated precondition on caller-supplied data.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace motcsm
