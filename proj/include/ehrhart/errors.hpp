#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad rational string, t <= 0, ...).
struct InputError : Error {
  using Error::Error;
};

// Geometry that the library refuses: dimension-deficient hulls, singular
// edge matrices, input points that are not vertices.
struct DegenerateGeometryError : InputError {
  using InputError::InputError;
};

// A vertex with more (or fewer) than d incident edges.
struct NotSimpleError : InputError {
  using InputError::InputError;
};

// A direction z with <z, w> = 0 for some edge vector w.
struct GenericityError : InputError {
  using InputError::InputError;
};

// Enumeration would exceed the desk-scale candidate budget.
struct ResourceError : Error {
  using Error::Error;
};

// Two routes that must agree exactly did not; always a bug or a broken
// precondition, never silently ignored.
struct InternalConsistencyError : Error {
  using Error::Error;
};

}  // namespace ehrhart
