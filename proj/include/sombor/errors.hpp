#pragma once

#include <stdexcept>

namespace sombor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge lists, sequence syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a graph, vertex or root argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A degree sequence that no tree realizes, or an infeasible parameter.
class NonRealizable : public Error {
 public:
  using Error::Error;
};

/// An enumeration or exploration would exceed its configured budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sombor
