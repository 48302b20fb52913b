#pragma once

#include <stdexcept>
#include <string>

namespace gfri {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, unparsable files, invalid graph descriptions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The requested construction does not exist mathematically
/// (Bezout condition violated, non-invertible filterbank).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Measurements are inconsistent with the assumed sparse model
/// (non-unimodular roots, off-grid locations, unpaired DCT roots).
class ModelMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace gfri
