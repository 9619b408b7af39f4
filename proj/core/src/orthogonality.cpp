#include "picnum/orthogonality.hpp"

#include "picnum/errors.hpp"
#include "picnum/fourier_mukai.hpp"

namespace picnum {

Int chi_obstruction(const Genus& g, const NumClass& e, const NumClass& f, OrthKind k) {
  NumClass ef = tensor(e, f);
  switch (k) {
    case OrthKind::tensor:
      return chi(g, ef);
    case OrthKind::minus_delta:
      return chi(g, e) * chi(g, f) - chi(g, ef);
    case OrthKind::plus_delta:
      return chi(g, e) * chi(g, f) + chi(g, twist(ef, -(2 * g.g - 2)));
  }
  throw error("unreachable orthogonality kind");
}

Rational slope_partner(const Genus& g, const Rational& mu_e, OrthKind k) {
  switch (k) {
    case OrthKind::tensor:
      return Rational(g.g - 1) - mu_e;
    case OrthKind::minus_delta:
      return mu_minus(g, mu_e);
    case OrthKind::plus_delta: {
      if (mu_e == Rational(g.g - 2))
        throw pole_error("plus_delta partner slope has a pole at mu = g-2 = " + mu_e.str());
      return Rational(g.g - 2) - Rational(g.g) / (Rational(g.g - 2) - mu_e);
    }
  }
  throw error("unreachable orthogonality kind");
}

OrthTriple symmetry_map(const Genus& g, const OrthTriple& t, SymmetryMove move) {
  if (move == SymmetryMove::swap) return {t.f, t.e, t.kind};
  if (t.kind == OrthKind::tensor)
    throw hypothesis_error("the serre symmetry applies to minus_delta/plus_delta pairs only");
  OrthKind flipped =
      t.kind == OrthKind::minus_delta ? OrthKind::plus_delta : OrthKind::minus_delta;
  return {serre_twist(g, t.e), serre_twist(g, t.f), flipped};
}

MinusDeltaBranch minus_delta_branch(const Genus& g, const NumClass& e, const NumClass& f) {
  if (chi_obstruction(g, e, f, OrthKind::minus_delta) != 0)
    return MinusDeltaBranch::nonzero;
  if (chi(g, e) == 0 && chi(g, f) == 0 && chi(g, tensor(e, f)) == 0)
    return MinusDeltaBranch::chi_degenerate;
  if (slope(e) == Rational(g.g)) return MinusDeltaBranch::pole_degenerate;
  return MinusDeltaBranch::slope_formula;
}

SameSlopeCondition same_slope_condition(const Genus& g, const NumClass& e) {
  Rational partner = slope_partner(g, slope(e), OrthKind::minus_delta);
  return {true, partner, Rational(g.g - 1) - partner, slope(e).is_zero()};
}

}  // namespace picnum
