#pragma once

#include <string>

#include "picnum/rational.hpp"

namespace picnum {

// Genus of the base curve. Non-negative; the curve-specific bounds further
// down the library require g >= 2 and check that themselves.
struct Genus {
  Int g;
  explicit Genus(Int genus);
};

// Numerical class of a coherent sheaf on a curve: (rank, degree).
// rank >= 0, and rank 0 (torsion) forces degree >= 0.
struct NumClass {
  Int r;
  Int d;
  NumClass(Int rank, Int degree);

  friend bool operator==(const NumClass&, const NumClass&) = default;
  std::string str() const;  // "(r,d)"
};

// mu = d/r; throws slope_error for rank 0.
Rational slope(const NumClass& c);

// Euler characteristic d + r(1-g) (Riemann-Roch).
Int chi(const Genus& g, const NumClass& c);

// (r1 r2, r1 d2 + r2 d1); factors must have positive rank.
NumClass tensor(const NumClass& a, const NumClass& b);

// (r, -d); positive rank required.
NumClass dual(const NumClass& c);

// Numerical effect of dualizing and twisting by the canonical bundle:
// (r, r(2g-2) - d). Sends slope mu to 2g-2 - mu. Positive rank required.
NumClass serre_twist(const Genus& g, const NumClass& c);

// Twist by a degree-n line bundle: (r, d + n r). Positive rank required.
NumClass twist(const NumClass& c, Int n);

}  // namespace picnum
