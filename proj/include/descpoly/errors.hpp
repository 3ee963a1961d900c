#pragma once

#include <stdexcept>
#include <string>

namespace descpoly {

/// Raised when an enumeration would exceed its configured size cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (set syntax, permutations, configurations).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configuration that violates the placement conditions of its flavor.
class MalformedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A board that does not reduce to a Ferrers board.
class NotFerrers : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A terminating series whose denominator vanishes before termination.
class IllPosedSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A (u, v) profile or size n that cannot produce a binary sequence.
class InconsistentProfile : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace descpoly
