#pragma once

#include <stdexcept>
#include <string>

namespace f2rep {

/// Raised when an argument violates an operation's precondition.
class ContractError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public ContractError {
  public:
    DivisionByZero() : ContractError("division by the zero polynomial") {}
};

/// f(0) = 0: x is not invertible modulo f, so no order exists.
class NoOrder : public ContractError {
  public:
    using ContractError::ContractError;
};

/// f does not divide 1 + x^N.
class NotAPeriod : public ContractError {
  public:
    using ContractError::ContractError;
};

class BoundExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An operation would allocate a polynomial larger than the configured bit cap.
class BitCapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public ContractError {
  public:
    using ContractError::ContractError;
};

} // namespace f2rep
