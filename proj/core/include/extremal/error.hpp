#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension/field mismatch, out-of-range parameter,
/// unparsable file, seminorm where a norm is required.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to produce a trustworthy answer.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace extremal
