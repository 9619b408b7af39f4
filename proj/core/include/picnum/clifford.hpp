#pragma once

#include <vector>

#include "picnum/polygon.hpp"

namespace picnum {

// Which estimate applies to one polygon segment, by its slope mu:
//   negative        mu < 0       -> no sections, bound 0
//   clifford_range  0<=mu<=2g-2  -> bound r + floor(d/2)
//   nonspecial      mu > 2g-2    -> bound chi = d + r(1-g)
enum class SegmentCase { negative, clifford_range, nonspecial };

struct SegmentBound {
  NumClass segment;
  Int bound;
  SegmentCase which;
};

struct CliffordReport {
  Int bound;           // min(direct, chi(total) + direct bound of the Serre-dual polygon)
  Int direct;          // plain sum of the per-segment bounds
  bool applicable;     // clifford_hypotheses(g, polygon)
  bool refined_by_duality;  // true iff the dual route beat the direct sum
  std::vector<SegmentBound> per_segment;
};

// Upper bound for the number of independent global sections of any bundle
// with the given slope polygon. Requires g >= 2. Always >= 0 and >= chi of
// the total class; both routes (direct and Serre-dual) are computed and the
// minimum is returned.
CliffordReport h0_upper_bound(const Genus& g, const HNPolygon& p);

// Classical hypotheses for the middle estimate on the whole polygon:
// mu_min >= 0 and mu_max <= 2g-2. Requires g >= 2.
bool clifford_hypotheses(const Genus& g, const HNPolygon& p);

// Same with strict inequalities: mu_min > 0 and mu_max < 2g-2.
bool clifford_hypotheses_strict(const Genus& g, const HNPolygon& p);

// Status of the equality h0 = r + d/2 relative to the bound:
//   not_equality                    h0 falls short of the middle bound
//   equality_requires_hyperelliptic equality holds under strict hypotheses;
//                                   only hyperelliptic curves carry such bundles
//   not_characterized               hypotheses hold only at the boundary
//                                   (mu_min = 0 or mu_max = 2g-2); no
//                                   characterization of equality is known
enum class EqualityCase { not_equality, equality_requires_hyperelliptic, not_characterized };

// Requires g >= 2, hypotheses holding at least non-strictly, 0 <= h0 and
// h0 within the bound; otherwise throws hypothesis_error.
EqualityCase equality_case(const Genus& g, const HNPolygon& p, Int h0);

// Right-hand side (1 - g/mu) * d' of the section-count test below; exact
// rational. Requires g >= 2, mu > 2g, sub of positive rank and degree.
Rational ct1_rhs(const Genus& g, const Rational& mu, const NumClass& sub);

// Strict test h0_sub - rk(sub) < ct1_rhs: every subsheaf of a semistable
// bundle of slope mu > 2g satisfies it.
bool ct1_holds(const Genus& g, const Rational& mu, const NumClass& sub, Int h0_sub);

}  // namespace picnum
