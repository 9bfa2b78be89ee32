#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cupcap/geometry.hpp"

namespace cupcap {

/// Thrown when an operation's input violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what, PointSet witness = {})
      : std::invalid_argument(what), witness_(std::move(witness)) {}

  /// Points that demonstrate the violation (an offending pair, a duplicate, ...).
  const PointSet& witness() const noexcept { return witness_; }

 private:
  PointSet witness_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what, PointSet witness = {})
      : std::logic_error(what), witness_(std::move(witness)) {}

  const PointSet& witness() const noexcept { return witness_; }

 private:
  PointSet witness_;
};

}  // namespace cupcap
