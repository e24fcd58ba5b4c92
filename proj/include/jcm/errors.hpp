#pragma once

#include <stdexcept>
#include <string>

namespace jcm {

/// Invalid argument or precondition violation (bad nbar, dims, lambda, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A computation failed to meet its numerical contract (non-convergence,
/// lost unitarity, inconsistent entropies).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A local projection whose outcome has (numerically) zero probability.
class DegenerateOutcome : public NumericError {
 public:
  explicit DegenerateOutcome(const std::string& what) : NumericError(what) {}
};

/// Output could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jcm
