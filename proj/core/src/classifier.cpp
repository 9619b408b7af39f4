#include "picnum/classifier.hpp"

#include "picnum/errors.hpp"

namespace picnum {

namespace {

const char* kThetaCaveat =
    "theta slope is the slope of the transform restricted to an embedded copy of the "
    "curve; no intrinsic degree against the theta divisor is assigned";
const char* kExistsCaveat =
    "existence verdict: asserts one semistable bundle of this slope (of the stated "
    "effective rank) with the transform property; not a statement about all bundles";
const char* kUniversalCaveat =
    "universal conclusions at this slope need the (semi)stability assumption on the "
    "queried bundle itself";
const char* kRaynaudCaveat =
    "the side condition can fail: there are stable bundles all of whose degree-1 "
    "twists have cohomology (theta-divisor base points; Raynaud's examples)";
const char* kGapCaveat = "no statement is available at slope exactly g-1";

// Slope window of the decision table; they tile the rationals.
std::string regime_tag(const Genus& g, const Rational& mu) {
  const Int G = g.g;
  if (mu > Rational(2 * G - 1)) return "mu > 2g-1";
  if (mu == Rational(2 * G - 1)) return "mu = 2g-1";
  if (mu > Rational(G)) return "mu in (g..2g-1)";
  if (mu == Rational(G)) return "mu = g";
  if (mu > Rational(G - 1)) return "mu in (g-1..g)";
  if (mu == Rational(G - 1)) return "mu = g-1";
  if (mu > Rational(G - 2)) return "mu in (g-2..g-1)";
  if (mu == Rational(G - 2)) return "mu = g-2";
  if (mu > Rational(-1)) return "mu in (-1..g-2)";
  if (mu == Rational(-1)) return "mu = -1";
  return "mu < -1";
}

}  // namespace

const char* conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::E0_stable: return "E0_stable";
    case Conclusion::E0_semistable: return "E0_semistable";
    case Conclusion::E1_stable: return "E1_stable";
    case Conclusion::E1_semistable: return "E1_semistable";
    case Conclusion::E0_semistable_exists: return "E0_semistable_exists";
    case Conclusion::E1_semistable_exists: return "E1_semistable_exists";
    case Conclusion::conditional: return "conditional";
    case Conclusion::unknown: return "unknown";
  }
  return "unknown";
}

Conclusion mirror_conclusion(Conclusion c) {
  switch (c) {
    case Conclusion::E0_stable: return Conclusion::E1_stable;
    case Conclusion::E1_stable: return Conclusion::E0_stable;
    case Conclusion::E0_semistable: return Conclusion::E1_semistable;
    case Conclusion::E1_semistable: return Conclusion::E0_semistable;
    case Conclusion::E0_semistable_exists: return Conclusion::E1_semistable_exists;
    case Conclusion::E1_semistable_exists: return Conclusion::E0_semistable_exists;
    case Conclusion::conditional: return Conclusion::conditional;
    case Conclusion::unknown: return Conclusion::unknown;
  }
  return Conclusion::unknown;
}

Verdict classify(const Genus& g, const NumClass& c, Assumption assumption) {
  if (g.g < 2)
    throw genus_error("classify needs genus >= 2, got " + to_string(g.g));
  if (c.r < 1) throw slope_error("classify needs rank >= 1, got " + c.str());

  const Int G = g.g;
  const Rational mu = slope(c);
  const bool ss = assumption != Assumption::exists_semistable;
  const bool strictly_stable = assumption == Assumption::stable;

  Verdict v;
  v.regime = regime_tag(g, mu);
  v.picard = picard_numerics(g, c, ss);
  if (v.picard.theta_slope) v.caveats.push_back(kThetaCaveat);

  if (ss) {
    if (mu > Rational(2 * G - 1)) {
      v.conclusion = strictly_stable ? Conclusion::E0_stable : Conclusion::E0_semistable;
      v.detail = std::string("E1 = 0; E0 is a ") +
                 (strictly_stable ? "stable" : "semistable") + " bundle of rank " +
                 to_string(chi(g, c));
      v.citation = strictly_stable
                       ? "E0 stability at slope above 2g-1"
                       : "E0 semistability at slope above 2g-1 (non-strict variant)";
    } else if (mu == Rational(2 * G - 1)) {
      v.conclusion = Conclusion::E0_semistable;
      v.detail = "E1 = 0; E0 is a semistable bundle of rank g*rk = " + to_string(G * c.r);
      v.citation = "E0 locally free of rank g*rk at slope 2g-1";
    } else if (mu == Rational(-1)) {
      v.conclusion = Conclusion::E1_semistable;
      v.detail = "E0 = 0; E1 is a semistable bundle of rank g*rk = " + to_string(G * c.r);
      v.citation = "E1 locally free of rank g*rk at slope -1";
    } else if (mu < Rational(-1)) {
      v.conclusion = strictly_stable ? Conclusion::E1_stable : Conclusion::E1_semistable;
      v.detail = std::string("E0 = 0; E1 is a ") +
                 (strictly_stable ? "stable" : "semistable") + " bundle of rank " +
                 to_string(-chi(g, c));
      v.citation = strictly_stable
                       ? "E1 stability at slope below -1"
                       : "E1 semistability at slope below -1 (non-strict variant)";
    } else if (mu == Rational(G - 2)) {
      v.conclusion = Conclusion::conditional;
      v.detail = "E0 = 0 and E1 semistable of rank " + to_string(c.r) +
                 " provided some degree-1 twist of the bundle has no cohomology";
      v.citation =
          "conditional E1 semistability at slope g-2 under a cohomology-free degree-1 twist";
      v.caveats.push_back(kRaynaudCaveat);
    } else if (mu == Rational(G)) {
      // Canonical-twist mirror of the slope g-2 row; needed so the verdict
      // table commutes with Serre duality.
      v.conclusion = Conclusion::conditional;
      v.detail = "E1 = 0 and E0 semistable of rank " + to_string(c.r) +
                 " provided some degree-(-1) twist of the bundle has no cohomology";
      v.citation =
          "conditional E0 semistability at slope g under a cohomology-free twist of degree -1";
      v.caveats.push_back(kRaynaudCaveat);
    } else if (mu == Rational(G - 1)) {
      v.caveats.push_back(kGapCaveat);
    }
    // remaining windows: unknown; picard data already carries what is known
  } else {
    if (mu > Rational(G - 1) && mu <= Rational(G)) {
      v.conclusion = Conclusion::E0_semistable_exists;
      v.popa = guaranteed_ranks(g, mu);
      v.detail = "some semistable bundle of this slope and rank " + to_string(*v.popa->R_min) +
                 " has E1 = 0 and semistable E0";
      v.citation = "effective existence of semistable E0 for slopes in (g-1..g]";
      v.caveats.push_back(kExistsCaveat);
    } else if (mu >= Rational(G - 2) && mu < Rational(G - 1)) {
      v.conclusion = Conclusion::E1_semistable_exists;
      v.popa = guaranteed_ranks(g, mu);
      v.detail = "some semistable bundle of this slope and rank " + to_string(*v.popa->R_min) +
                 " has E0 = 0 and semistable E1";
      v.citation = "effective existence of semistable E1 for slopes in [g-2..g-1)";
      v.caveats.push_back(kExistsCaveat);
    } else if (mu == Rational(G - 1)) {
      v.caveats.push_back(kGapCaveat);
    } else {
      v.caveats.push_back(kUniversalCaveat);
    }
  }
  return v;
}

bool duality_check(const Genus& g, const NumClass& c) {
  NumClass m = serre_twist(g, c);
  for (Assumption a :
       {Assumption::stable, Assumption::semistable, Assumption::exists_semistable}) {
    Verdict v1 = classify(g, c, a);
    Verdict v2 = classify(g, m, a);
    if (mirror_conclusion(v1.conclusion) != v2.conclusion) return false;
    if (v1.picard.rank0 != v2.picard.rank1 || v1.picard.rank1 != v2.picard.rank0)
      return false;
  }
  return true;
}

}  // namespace picnum
