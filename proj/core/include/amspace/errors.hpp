#pragma once

#include <stdexcept>
#include <string>

namespace amspace {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation (non-SPD matrix, t past blow-up, |p| >= 1).
struct DomainError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Plane section spanned by dependent vectors.
struct DegenerateError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

// Input has a component in the kernel of an operator being inverted.
struct KernelError : Error {
  using Error::Error;
};

// Precondition on a field (horizontality, base mismatch) violated.
struct ContractError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

}  // namespace amspace
