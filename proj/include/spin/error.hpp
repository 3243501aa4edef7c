#pragma once

#include <stdexcept>
#include <string>

namespace spin {

// A mathematical precondition failed on well-formed input (exit status 1).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input itself is malformed: bad JSON shape, unknown variable,
// coefficient outside the base field (exit status 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spin
