#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Base of every exception thrown by the library.
class SpectraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

class SingularMatrixError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

class DivisionByZeroError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// Input vertices do not describe a full-dimensional polytope with the
/// origin in its strict interior.
class InvalidPolytopeError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// The requested computation is not available for this input (dimension
/// ceiling, non-simplicial polytope, wrong dimension for a 2D-only routine).
class UnsupportedError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

class ParameterError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

class PreconditionError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// An internal consistency check failed. Always indicates a bug.
class InternalError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

}  // namespace spectra
