#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxlat {

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  CapacityExceeded,
  DimensionMismatch,
  NotAProximityLattice,
  NotJoinStrong,
  NotMeetStrong,
  NotDoublyStrong,
  NotAProximityMorphism,
  NotAJMorphism,
  NotAHomomorphism,
  NotDistributive,
  NotT0,
  InvalidRoundSubset,
  InvalidSpace,
  KindMismatch,
  PreconditionFailed,
  ParseError,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind and a human-readable
/// message; the message includes the witness when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a property the mathematics guarantees does not hold on a
/// computed value. Indicates a bug or a violated precondition upstream.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::InternalInvariant, what);
}

}  // namespace proxlat
