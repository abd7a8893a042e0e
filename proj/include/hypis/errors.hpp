#pragma once

#include <stdexcept>
#include <string>

namespace hypis {

/// Caller handed us something outside an operation's stated domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A condition the library itself guarantees was found broken.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypis
