#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mahler {

/// Violated precondition (zero polynomial where a nonzero one is required,
/// even family parameter, non-primitive input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Numerical procedure did not reach the requested accuracy within its
/// precision/iteration caps.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  /// Best radius / width reached before giving up.
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// The circle quadrature hit a root on (or numerically at) |z| = 1.
class UnitCircleRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mahler
