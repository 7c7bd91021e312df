#pragma once

#include <stdexcept>
#include <string>

namespace borsuk {

/// Base class for every domain failure raised by the library. The CLI maps
/// these to exit code 1 and prints what() verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential routine was asked to run above its configured order bound.
class TooLarge : public Error {
 public:
  TooLarge(const std::string& what, std::size_t order, std::size_t bound)
      : Error("instance too large for " + what + ": order " + std::to_string(order) +
              " exceeds bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  std::size_t order() const { return order_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t order_;
  std::size_t bound_;
};

/// Input violates a documented precondition or hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction failed its own post-verification, or a numeric solve did
/// not converge within its retry budget.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Diameter-edge classification hit a pair inside the forbidden tolerance band.
class AmbiguousGap : public Error {
 public:
  using Error::Error;
};

/// Input file does not match its documented JSON format.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace borsuk
