#pragma once

#include <stdexcept>
#include <string>

namespace polyorder {

// A point was handed to an operation outside the domain it must live in.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A post-condition that follows from a theorem did not hold. Raised by the
// classifier when the inclusion chain ESS => minimal => critical breaks.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polyorder
