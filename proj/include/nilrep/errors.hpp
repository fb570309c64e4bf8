#pragma once

#include <stdexcept>

namespace nilrep {

// Malformed or inadmissible input: bad files, non-nilpotent algebras,
// non-faithful representations. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that holds by construction was observed to fail. The CLI maps
// these to exit code 2.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilrep
