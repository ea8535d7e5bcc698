#pragma once

#include <stdexcept>
#include <string>

namespace texturematrix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Unsupported container, header field, or bit depth.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Image with a zero or inconsistent dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// No neighbor pair exists for the requested direction or axis.
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace texturematrix
