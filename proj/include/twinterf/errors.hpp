#pragma once

#include <stdexcept>

namespace twinterf {

/// Thrown when caller-supplied data violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails. This signals a bug in
/// the engine (or memory corruption), never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twinterf
