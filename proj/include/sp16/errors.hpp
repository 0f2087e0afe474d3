#pragma once

#include <stdexcept>
#include <string>

namespace sp16 {

/// Base for every error the library raises deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live at different tower levels, or a level is out of range.
class LevelError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs invertible inputs met the zero element.
class ZeroElementError : public Error {
 public:
  using Error::Error;
};

/// The selected set R has fewer than two elements, so phi and the bound are undefined.
class DegenerateRError : public Error {
 public:
  using Error::Error;
};

/// Input data (a set file, config, or declared flag) failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sp16
