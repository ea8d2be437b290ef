#pragma once

#include <stdexcept>
#include <string>

namespace lievf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class NonRationalExponential : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  using Error::Error;
};

class NoGoodPoint : public Error {
 public:
  using Error::Error;
};

class NotSemisimple : public Error {
 public:
  using Error::Error;
};

class UnrecognizedIdealShape : public Error {
 public:
  using Error::Error;
};

}  // namespace lievf
