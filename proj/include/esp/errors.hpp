#pragma once

#include <stdexcept>

namespace esp {

// Base class for every recoverable error raised by this library. The CLI maps
// these to exit code 1; anything else escaping to main is an internal bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownRatingSymbol : public Error {
 public:
  using Error::Error;
};

class MissingColumn : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidKloc : public Error {
 public:
  using Error::Error;
};

class UndefinedTuningCell : public Error {
 public:
  using Error::Error;
};

class MissingActualEffort : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class Underdetermined : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

}  // namespace esp
