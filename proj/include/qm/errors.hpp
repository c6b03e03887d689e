#pragma once

#include <stdexcept>
#include <string>

namespace qm {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// argument is not a unit of the residue ring the character lives on
struct NonUnitError : Error {
  using Error::Error;
};

// inversion of a series that is zero to its known precision
struct ZeroLeadingCoefficientError : Error {
  using Error::Error;
};

// an operation asked for more coefficients than the operand can support
struct InsufficientPrecisionError : Error {
  using Error::Error;
};

// coefficient-twisting ops need integer exponents
struct FractionalLatticeError : Error {
  using Error::Error;
};

// undilation hit an exponent not divisible by the dilation factor
struct NonDivisibleExponentError : Error {
  using Error::Error;
};

struct UnsupportedLevelError : Error {
  using Error::Error;
};

struct InvalidDivisionPointError : Error {
  using Error::Error;
};

struct SearchFailedError : Error {
  using Error::Error;
};

struct GridTooSmallError : Error {
  using Error::Error;
};

struct ResidualNonzeroError : Error {
  using Error::Error;
};

struct NonIntegerCoefficientError : Error {
  using Error::Error;
};

struct NormalizationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace qm
