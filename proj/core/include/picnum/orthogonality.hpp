#pragma once

#include "picnum/numclass.hpp"

namespace picnum {

// The three numerical orthogonality conditions between classes e and f.
// Each is the vanishing of one Euler-characteristic expression; vanishing
// is NECESSARY for the corresponding sheaf-level orthogonality, never
// sufficient, and every consumer of these values must say so.
enum class OrthKind { tensor, minus_delta, plus_delta };

// The obstruction integer:
//   tensor       chi(e (x) f)
//   minus_delta  chi(e) chi(f) - chi(e (x) f)
//   plus_delta   chi(e) chi(f) + chi(e (x) f (x) (line of degree -(2g-2)))
Int chi_obstruction(const Genus& g, const NumClass& e, const NumClass& f, OrthKind k);

// Slope a partner f must have for the obstruction to vanish, as a function
// of mu(e):
//   tensor       g - 1 - mu
//   minus_delta  mu_minus(g, mu)            (pole at mu = g)
//   plus_delta   g - 2 - g/(g - 2 - mu)     (pole at mu = g - 2)
Rational slope_partner(const Genus& g, const Rational& mu_e, OrthKind k);

// The two symmetries of an orthogonal pair. `swap` exchanges the classes
// for any kind; `serre` replaces both classes by their serre_twist and
// exchanges minus_delta <-> plus_delta (tensor has no serre move here).
// Both leave chi_obstruction unchanged.
enum class SymmetryMove { swap, serre };

struct OrthTriple {
  NumClass e;
  NumClass f;
  OrthKind kind;
};
OrthTriple symmetry_map(const Genus& g, const OrthTriple& t, SymmetryMove move);

// Exact classification of when the minus_delta obstruction vanishes:
//   nonzero          it does not
//   slope_formula    mu(f) = mu_minus(g, mu(e))
//   chi_degenerate   chi(e) = chi(f) = chi(e (x) f) = 0 (happens only at
//                    g = 1 with both slopes 0; also satisfies the formula,
//                    reported as the more specific branch)
//   pole_degenerate  mu(e) = g with zero obstruction (happens only at
//                    g = 0, where the partner-slope map has its pole)
// The union of the three zero branches is exactly the zero set.
enum class MinusDeltaBranch { nonzero, slope_formula, chi_degenerate, pole_degenerate };
MinusDeltaBranch minus_delta_branch(const Genus& g, const NumClass& e, const NumClass& f);

// Data forced on any minus_delta-orthogonal partner pair by e alone: the
// partner's slope, the common slope both transform terms of e must then
// have, and whether a partner is guaranteed to exist (exactly when
// mu(e) = 0). Throws pole_error at mu(e) = g.
struct SameSlopeCondition {
  bool transform_slopes_must_agree;  // always true: both terms are forced to one slope
  Rational partner_slope;            // slope_partner(g, mu(e), minus_delta)
  Rational common_transform_slope;   // g - 1 - partner_slope
  bool existence_guaranteed;         // mu(e) == 0
};
SameSlopeCondition same_slope_condition(const Genus& g, const NumClass& e);

}  // namespace picnum
