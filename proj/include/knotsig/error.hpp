#pragma once

#include <stdexcept>
#include <string>

namespace knotsig {

// Malformed textual input (PD code, braid word, catalogue line, angle).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but violates an operation's stated precondition
// (negative crossing, split diagram, non-reduced diagram, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical sign could not be certified at the maximum precision.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug, never an input problem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knotsig
