#include "picnum/clifford.hpp"

#include "picnum/errors.hpp"

namespace picnum {

namespace {

void require_curve_genus(const Genus& g, const char* op) {
  if (g.g < 2)
    throw genus_error(std::string(op) + " needs genus >= 2, got " + to_string(g.g));
}

SegmentBound bound_one_segment(const Genus& g, const NumClass& s) {
  Rational mu = slope(s);
  if (mu < Rational(0)) return {s, 0, SegmentCase::negative};
  if (mu <= Rational(2 * g.g - 2))
    return {s, s.r + floor_div(s.d, 2), SegmentCase::clifford_range};
  return {s, chi(g, s), SegmentCase::nonspecial};
}

Int direct_bound(const Genus& g, const HNPolygon& p, std::vector<SegmentBound>* table) {
  Int total = 0;
  for (const auto& s : p.segments()) {
    SegmentBound b = bound_one_segment(g, s);
    total += b.bound;
    if (table) table->push_back(b);
  }
  return total;
}

}  // namespace

CliffordReport h0_upper_bound(const Genus& g, const HNPolygon& p) {
  require_curve_genus(g, "h0_upper_bound");
  CliffordReport rep;
  rep.direct = direct_bound(g, p, &rep.per_segment);
  // Serre-dual route: h0 = chi + h1 and h1 is the h0 of the dual polygon,
  // so chi(total) + direct bound of the dual polygon is a second upper bound.
  Int via_dual = chi(g, p.total()) + direct_bound(g, polygon_serre_dual(g, p), nullptr);
  rep.refined_by_duality = via_dual < rep.direct;
  rep.bound = rep.refined_by_duality ? via_dual : rep.direct;
  rep.applicable = clifford_hypotheses(g, p);
  return rep;
}

bool clifford_hypotheses(const Genus& g, const HNPolygon& p) {
  require_curve_genus(g, "clifford_hypotheses");
  return p.mu_min() >= Rational(0) && p.mu_max() <= Rational(2 * g.g - 2);
}

bool clifford_hypotheses_strict(const Genus& g, const HNPolygon& p) {
  require_curve_genus(g, "clifford_hypotheses_strict");
  return p.mu_min() > Rational(0) && p.mu_max() < Rational(2 * g.g - 2);
}

EqualityCase equality_case(const Genus& g, const HNPolygon& p, Int h0) {
  require_curve_genus(g, "equality_case");
  if (!clifford_hypotheses(g, p))
    throw hypothesis_error("equality_case needs slopes within [0, 2g-2], got polygon " +
                           p.str());
  if (h0 < 0) throw hypothesis_error("negative section count");
  CliffordReport rep = h0_upper_bound(g, p);
  if (h0 > rep.bound)
    throw hypothesis_error("section count " + to_string(h0) +
                           " exceeds the upper bound " + to_string(rep.bound));
  if (!clifford_hypotheses_strict(g, p)) return EqualityCase::not_characterized;
  NumClass t = p.total();
  // Equality means h0 - r = d/2 exactly.
  if (2 * (h0 - t.r) == t.d) return EqualityCase::equality_requires_hyperelliptic;
  return EqualityCase::not_equality;
}

Rational ct1_rhs(const Genus& g, const Rational& mu, const NumClass& sub) {
  require_curve_genus(g, "ct1_rhs");
  if (!(mu > Rational(2 * g.g)))
    throw hypothesis_error("ct1_rhs needs slope > 2g, got " + mu.str());
  if (sub.r <= 0 || sub.d <= 0)
    throw hypothesis_error("ct1_rhs needs a subsheaf class of positive rank and degree, got " +
                           sub.str());
  return (Rational(1) - Rational(g.g) / mu) * Rational(sub.d);
}

bool ct1_holds(const Genus& g, const Rational& mu, const NumClass& sub, Int h0_sub) {
  return Rational(h0_sub - sub.r) < ct1_rhs(g, mu, sub);
}

}  // namespace picnum
