#pragma once

#include <stdexcept>
#include <string>

namespace classlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: cycle strings, group specs, class expressions, catalog files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (degree mismatch, non-normal
/// subgroup, trivial input where a nontrivial group is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A verification that a proved statement guarantees has failed. Indicates
/// an implementation bug; carries a witness dump in what().
class FalsificationAlarm : public Error {
 public:
  using Error::Error;
};

}  // namespace classlab
