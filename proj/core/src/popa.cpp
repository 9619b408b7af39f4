#include "picnum/popa.hpp"

#include "picnum/errors.hpp"
#include "picnum/numclass.hpp"

namespace picnum {

Int popa_P(Int r, Int h) {
  if (r < 1 || h < 1)
    throw hypothesis_error("popa_P needs r >= 1 and h >= 1, got r=" + to_string(r) +
                           ", h=" + to_string(h));
  return 2 * h * ceil_div(h * h * r * r + 1, 8 * h);
}

GuaranteedRanks guaranteed_ranks(const Genus& g, const Rational& mu) {
  if (g.g < 2)
    throw genus_error("guaranteed_ranks needs genus >= 2, got " + to_string(g.g));
  GuaranteedRanks out;
  out.r_reduced = mu.den();
  if (mu > Rational(g.g - 1) && mu <= Rational(g.g))
    out.regime = PopaRegime::f0_exists;
  else if (mu >= Rational(g.g - 2) && mu < Rational(g.g - 1))
    out.regime = PopaRegime::f1_exists;
  else if (mu > Rational(g.g) && mu <= Rational(g.g + 1))
    out.regime = PopaRegime::fminus_sum_semistable;
  else
    out.regime = PopaRegime::not_covered;
  if (out.regime != PopaRegime::not_covered) {
    out.k_min = popa_P(out.r_reduced, g.g);
    out.R_min = *out.k_min * out.r_reduced;
  }
  return out;
}

}  // namespace picnum
