#pragma once

#include <stdexcept>
#include <string>

namespace combhardy {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A gap-family parameter is out of range or produces a gap <= 1.
class InvalidFamilyParam : public Error {
  using Error::Error;
};

class IndexOutOfRange : public Error {
  using Error::Error;
};

/// The query lies beyond the materialized teeth; the finite prefix cannot
/// answer it.
class OutsideTruncation : public Error {
  using Error::Error;
};

/// A criterion denominator log x_n <= 0 was encountered.
class DegenerateLog : public Error {
  using Error::Error;
};

/// A coordinate exceeds the floating point cap; only log forms exist.
class OverflowError : public Error {
  using Error::Error;
};

class ConfigError : public Error {
  using Error::Error;
};

/// Source and target fall in different components of the grid graph.
class Unreachable : public Error {
  using Error::Error;
};

class StartOutsideDomain : public Error {
  using Error::Error;
};

/// Too many paths escaped the materialized region under strict mode.
class TooManyTruncations : public Error {
  using Error::Error;
};

class SpecParseError : public Error {
  using Error::Error;
};

class IoError : public Error {
  using Error::Error;
};

}  // namespace combhardy
