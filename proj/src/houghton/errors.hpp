#pragma once

#include <stdexcept>
#include <string>

namespace houghton {

// Bad arguments, malformed input, parse failures. CLI exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition or postcondition check failed, or a certificate was
// rejected. Carries an optional structured detail string (JSON). CLI exit
// code 1.
struct violation_error : std::runtime_error {
  explicit violation_error(const std::string& msg, std::string detail = "")
      : std::runtime_error(msg), detail_json(std::move(detail)) {}
  std::string detail_json;
};

// A bounded search ran out of its node or iteration budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace houghton
