#pragma once

#include <stdexcept>
#include <string>

namespace fstego {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two grids that must agree in shape do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A grid has a size the operation cannot handle (odd, not a power of two, not square).
class SizingError : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

/// A numeric parameter is out of range or not finite.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable image file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Malformed key file.
class KeyError : public Error {
 public:
  using Error::Error;
};

/// Correlation coefficient requested for two constant images.
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

}  // namespace fstego
