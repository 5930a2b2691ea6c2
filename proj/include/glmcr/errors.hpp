#pragma once

#include <stdexcept>
#include <string>

namespace glmcr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rational function was evaluated on one of its poles (or a division by zero).
struct PoleError : Error {
  using Error::Error;
};

struct DuplicateError : Error {
  using Error::Error;
};

struct SizeMismatchError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

/// Exact sampling of a rational function could not be carried out.
struct ReconstructionError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

/// Rejection sampling gave up before finding admissible parameters.
struct ExhaustionError : Error {
  using Error::Error;
};

/// An identity check failed; what() carries both sides.
struct CheckFailure : Error {
  using Error::Error;
};

}  // namespace glmcr
