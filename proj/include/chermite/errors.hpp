#pragma once

#include <stdexcept>
#include <string>

namespace chermite {

// Argument outside an operation's validity region (e.g. |u| >= 1 at a kernel pole).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncated series whose final increment exceeded the acceptance threshold.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chermite
