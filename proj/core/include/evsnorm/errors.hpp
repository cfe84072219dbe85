#ifndef EVSNORM_ERRORS_HPP
#define EVSNORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evsnorm {

/// Base class for all library errors.
class EvsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector or weight list does not have the dimension an operation expects.
class DimensionMismatchError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// A p-norm exponent below 1 (the triangle inequality would fail).
class InvalidPError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// Malformed norm / vector / set literal.
class ParseError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// An instance cannot supply what a checker asked for (e.g. too few samples).
class InstanceError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// An equality decision fell into the indeterminate band around eps_eq.
class ToleranceError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// No primitive element was found below x in the candidate pool.
class A6ViolationError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// Witness family name not registered.
class UnknownFamilyError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// Witness family parameters outside the family's domain.
class BadParamsError : public EvsError {
 public:
  using EvsError::EvsError;
};

/// An operation received the zero function where a norm is required.
class ZeroNormError : public EvsError {
 public:
  using EvsError::EvsError;
};

}  // namespace evsnorm

#endif
