//
// errors.hpp
//
// Exception types. Malformed input derives from std::invalid_argument,
// everything else from std::runtime_error.
//

#pragma once

#include <stdexcept>
#include <string>

namespace juggle {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IllegalThrow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidPattern : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An exhaustive enumeration would exceed its configured budget.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated sum left too much mass uncounted to decide a verdict.
struct CapTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace juggle
