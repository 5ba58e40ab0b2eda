#pragma once

#include <stdexcept>
#include <string>

namespace ght {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shift parameter (or another scalar argument) violates its constraint.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Multi-index outside [1,n]^m or of the wrong length.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Vector length does not match the tensor dimension.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// The requested computation has no supported algorithm for this
// parameter range (a <= 0 power method, odd-m root operator, a < 1
// integral form, ...).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

// K(a) / C(a) requested where no bound exists.
class UndefinedConstant : public Error {
 public:
  using Error::Error;
};

// Zero vector handed to a Rayleigh quotient or eigensolver.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Tail exponent s <= 1: the comparison series diverges.
class DivergentExponent : public Error {
 public:
  using Error::Error;
};

// Malformed vector file or CLI range expression.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ght
