#pragma once

#include <stdexcept>
#include <string>

namespace eeh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, empty simplices, broken JSON fields.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An elementary move whose preconditions do not hold in the complex.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine refused an input that is too large.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Normalization drove the axiom budget below zero.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// Vertex identifications that would merge faces unintentionally.
class PastingError : public Error {
 public:
  using Error::Error;
};

}  // namespace eeh
