#pragma once

#include <stdexcept>
#include <string>

namespace acmv {

// Base error carrying a stable category token, printed by the CLI as
// `error [<category>] <message>`.
class Error : public std::runtime_error {
public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

private:
  std::string category_;
};

// Bad inputs: dimension mismatches, out-of-range values, unknown names.
class InvalidArgumentError : public Error {
public:
  explicit InvalidArgumentError(const std::string& message)
      : Error("invalid_argument", message) {}
};

// Numerical failures: divergence, non-convergence, singular or degenerate
// systems.
class NumericError : public Error {
public:
  explicit NumericError(const std::string& message) : Error("numeric", message) {}
};

// File and parse failures.
class IoError : public Error {
public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

} // namespace acmv
