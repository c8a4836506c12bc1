#ifndef LEONOMA_ERRORS_HPP
#define LEONOMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leonoma {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Closed-form path refused because a parameter sits on (or too close to) a
// pole of the hypergeometric series; callers fall back to quadrature.
class IllConditionedError : public NumericError {
 public:
  explicit IllConditionedError(const std::string& what) : NumericError(what) {}
};

class InvalidArgumentError : public std::invalid_argument {
 public:
  explicit InvalidArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

class RejectionBudgetError : public std::runtime_error {
 public:
  explicit RejectionBudgetError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace leonoma

#endif
