#pragma once

#include <stdexcept>
#include <string>

namespace pbundle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad params file, invalid ranges, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

/// Polynomial division left a remainder; the remainder is kept as text.
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NonIntegralCoefficient : public Error {
 public:
  using Error::Error;
};

class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

class RankUnderflow : public Error {
 public:
  using Error::Error;
};

class RangeTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace pbundle
