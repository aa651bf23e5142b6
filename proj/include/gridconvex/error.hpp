#pragma once

#include <stdexcept>
#include <string>

namespace gridconvex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (dimension mismatch, index out
/// of range, inconsistent inputs).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter is outside its valid range (eps <= 0, eta outside
/// (0,1], ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The lattice (or a structure derived from it) cannot be represented.
class GridTooLarge : public Error {
 public:
  using Error::Error;
};

/// No radius on the candidate ladder produced a single noise-free cluster.
class NoEpsilonFound : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Shape parameters that describe an empty or degenerate region.
class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridconvex
