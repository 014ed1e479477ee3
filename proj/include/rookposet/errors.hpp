#pragma once

#include <stdexcept>
#include <string>

namespace rookposet {

// Base of every error thrown by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on a mathematical object violated (i <= j for a root, a
// non-orthogonal placement where an involution is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two roots share a row or a column.
class AttackError : public Error {
 public:
  using Error::Error;
};

// Index outside 1..n.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured element cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operands live in different ambient sizes.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A rank formula produced an odd numerator. Integrality is a theorem, so this
// always indicates an internal bug.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Placement is not an element of the poset it was looked up in.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// Malformed placement text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rookposet
