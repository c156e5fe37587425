#pragma once

#include <stdexcept>
#include <string>

namespace cts {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File was readable but is not an image this library understands.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two rasters that must share dimensions do not.
class DimensionMismatch : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace cts
