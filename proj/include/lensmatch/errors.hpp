#pragma once

#include <stdexcept>
#include <string>

namespace lensmatch {

/// Violated mathematical precondition (pole on the boundary, value outside
/// the lens, unstable data, ...). The CLI maps these to exit code 2.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The zero structure of b is outside the supported classes (all disc zeros
/// at the origin, or simple pairwise-distinct disc zeros).
class UnsupportedStructureError : public MathError {
 public:
  using MathError::MathError;
};

/// The matching constraint is satisfiable by a constant, so the problem has
/// a rational optimum and the non-attainment machinery does not apply.
class DegenerateInstanceError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace lensmatch
