#pragma once

#include <stdexcept>
#include <string>

namespace picnum {

// Base class for every domain error thrown by the library. Callers that only
// want "picnum rejected the input" can catch this; tests catch the subtypes.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Slope/chi-style operation applied to a class it is not defined for
// (rank-zero slope, rank-zero factor in a tensor product, ...).
struct slope_error : error {
  using error::error;
};

// Segment list that is not a valid polygon (empty, non-positive rank,
// slopes not strictly decreasing).
struct polygon_error : error {
  using error::error;
};

// Genus outside the range an operation supports (negative genus anywhere,
// g < 2 for curve-specific bounds, g = 0 where a transform is singular).
struct genus_error : error {
  using error::error;
};

// Input violating a documented slope-range or positivity hypothesis.
struct hypothesis_error : error {
  using error::error;
};

// Evaluation at a pole of a rational map in the slope variable.
struct pole_error : error {
  using error::error;
};

// Numeric data that cannot come from any actual class (non-integral
// preimage under an integral transform).
struct inconsistent_error : error {
  using error::error;
};

}  // namespace picnum
