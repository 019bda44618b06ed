#pragma once

#include <stdexcept>
#include <string>

namespace perfcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation that is required to fix the zero vector does not.
class ZeroNotFixed : public Error {
 public:
  ZeroNotFixed() : Error("permutation does not fix the zero vector") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested computation is larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed file or text input.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// Quadruple-pair checks need a non-linear permutation.
class AffineInput : public Error {
 public:
  AffineInput() : Error("permutation is linear; the quadruple system is affine") {}
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class ExcludedLength : public Error {
 public:
  using Error::Error;
};

}  // namespace perfcode
