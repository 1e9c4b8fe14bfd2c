#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mrlab {

/// Structured failure of a hypothesis the numerics rely on (A_p membership,
/// ellipticity, integrability of a degeneracy, contraction of a series).
/// `details` carries key/value pairs that the CLI prints verbatim.
class ConditionViolation : public std::runtime_error {
 public:
  using Detail = std::pair<std::string, std::string>;

  ConditionViolation(std::string condition, std::string message,
                     std::vector<Detail> details = {})
      : std::runtime_error(condition + ": " + message),
        condition_(std::move(condition)),
        message_(std::move(message)),
        details_(std::move(details)) {}

  const std::string& condition() const noexcept { return condition_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<Detail>& details() const noexcept { return details_; }

 private:
  std::string condition_;
  std::string message_;
  std::vector<Detail> details_;
};

/// A resolvent or symbol was evaluated at a singular point.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neumann iteration failed to contract.
class NonContraction : public ConditionViolation {
 public:
  using ConditionViolation::ConditionViolation;
};

}  // namespace mrlab
