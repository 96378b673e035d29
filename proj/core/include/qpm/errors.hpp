#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qpm {

/// Input outside the physical or mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A linear solve or eigen-solve that could not produce a trustworthy answer.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::vector<double> diagnostics = {})
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  /// Condition estimates or residual history, depending on the failing solver.
  const std::vector<double>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<double> diagnostics_;
};

/// Schema or physical-constraint violation while reading a scenario config.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system failure while writing results.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpm
