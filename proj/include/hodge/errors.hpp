#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Input hypersurface failed the smoothness gate.
class SingularError : public std::runtime_error {
 public:
  explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested computation would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Operation called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hodge
