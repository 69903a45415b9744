#pragma once

#include <stdexcept>
#include <string>

namespace srtor {

// Bad user input: malformed data, out-of-range indices, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A consistency check that holds by construction has failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace srtor
