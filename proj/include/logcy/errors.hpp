#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace logcy {

/// Input that does not parse or violates a value-type invariant.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed input that an operation's precondition rejects. The
/// precondition name is stable and meant for diagnostics.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string precondition, const std::string& detail)
      : std::runtime_error(precondition + ": " + detail),
        precondition_(std::move(precondition)) {}

  const std::string& precondition() const noexcept { return precondition_; }

 private:
  std::string precondition_;
};

class NotEligible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace logcy
