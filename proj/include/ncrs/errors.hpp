#pragma once

#include <stdexcept>

namespace ncrs {

/// A mathematical precondition does not hold (the CLI maps these to exit 2).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public MathError {
 public:
  using MathError::MathError;
};

class NotSpecialUnit : public MathError {
 public:
  using MathError::MathError;
};

class CharZero : public MathError {
 public:
  using MathError::MathError;
};

/// Two operands live over different alphabets or fields.
class Mismatch : public MathError {
 public:
  using MathError::MathError;
};

/// A closure did not stabilise within the requested number of elements.
class CapExceeded : public MathError {
 public:
  using MathError::MathError;
};

class NegativeEntries : public MathError {
 public:
  using MathError::MathError;
};

class NotCharacteristic : public MathError {
 public:
  using MathError::MathError;
};

class DivisibilityViolation : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace ncrs
