#ifndef MSUB_ERRORS_HPP
#define MSUB_ERRORS_HPP

#include "msub/exactcore.hpp"

#include <stdexcept>
#include <string>

namespace msub {

/// #K is below what an existence argument needs.
class FieldTooSmall : public std::runtime_error {
 public:
  FieldTooSmall(std::size_t required, const std::string& what)
      : std::runtime_error(what), required_(required) {}
  /// The cardinality bound that failed (e.g. d_k).
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

/// An operation's documented precondition does not hold for the input.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed the configured guard.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypothesis needed for a construction fails; carries a witnessing matrix.
class HypothesisFailed : public std::runtime_error {
 public:
  HypothesisFailed(DenseMatrix witness, const std::string& what)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const DenseMatrix& witness() const { return witness_; }

 private:
  DenseMatrix witness_;
};

/// A guarantee that the underlying theory promises was observed to fail.
/// This always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace msub

#endif  // MSUB_ERRORS_HPP
