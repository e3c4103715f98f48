#pragma once

#include <stdexcept>
#include <string>

namespace deaic {

/// Malformed caller input: bad dimensions, non-finite numbers, unparseable
/// text. Distinct from an infeasible but well-formed program.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside its modeled domain, e.g. a what-if electricity level
/// below the producer's base consumption.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state the pipeline guarantees unreachable on valid data, such as an
/// infeasible efficiency program. Carries diagnostic text for the caller.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deaic
