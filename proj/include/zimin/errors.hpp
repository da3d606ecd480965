#pragma once

#include <stdexcept>
#include <string>

namespace zimin {

// Precondition on an argument was violated by the caller.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument lies outside the mathematical domain (ln of a non-positive
// interval, division by an interval containing zero, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameters for which the certified machinery has no valid tail bound.
struct UnsupportedRegime : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw ContractError(what);
}

}  // namespace detail
}  // namespace zimin
