#include "picnum/fourier_mukai.hpp"

#include "picnum/clifford.hpp"
#include "picnum/errors.hpp"

namespace picnum {

namespace {

void require_genus_at_least(const Genus& g, Int min, const char* op) {
  if (g.g < min)
    throw genus_error(std::string(op) + " needs genus >= " + to_string(min) +
                      ", got " + to_string(g.g));
}

// Largest integer strictly below q.
Int strict_floor(const Rational& q) {
  return q.is_integer() ? q.num() - 1 : q.floor();
}

}  // namespace

FMNumerics fm_matrix(const Genus& g, const NumClass& c) {
  return {c.d - g.g * c.r, -c.d};
}

NumClass fm_matrix_inverse(const Genus& g, const FMNumerics& v) {
  if (g.g == 0) throw genus_error("transform matrix is singular at genus 0");
  Int d = -v.D;
  Int num = d - v.R;
  if (num % g.g != 0)
    throw inconsistent_error("no class maps to (R,D) = (" + to_string(v.R) + "," +
                             to_string(v.D) + ") at genus " + to_string(g.g));
  Int r = num / g.g;
  if (r < 0)
    throw inconsistent_error("preimage of (R,D) = (" + to_string(v.R) + "," +
                             to_string(v.D) + ") has negative rank");
  return NumClass(r, d);
}

NumClass fminus_f0_numerics(const Genus& g, const NumClass& c) {
  require_genus_at_least(g, 1, "fminus_f0_numerics");
  if (!(slope(c) > Rational(2 * g.g - 2)))
    throw hypothesis_error("fminus_f0_numerics needs slope > 2g-2, got " +
                           slope(c).str());
  Int R = c.d - g.g * c.r;
  if (R <= 0)  // only reachable at g = 1, where 2g-2 = 0 < g
    throw hypothesis_error("transform of " + c.str() +
                           " is not a positive-rank bundle at genus " + to_string(g.g));
  return NumClass(R, -c.d);
}

NumClass fplus_f1_numerics(const Genus& g, const NumClass& c) {
  require_genus_at_least(g, 1, "fplus_f1_numerics");
  if (!(slope(c) < Rational(-2)))
    throw hypothesis_error("fplus_f1_numerics needs slope < -2, got " + slope(c).str());
  // rank = r(g-2) - d > rg > 0 because d < -2r
  return NumClass(c.r * (g.g - 2) - c.d, c.r * (2 * g.g - 2) - c.d);
}

Rational mu_minus(const Genus& g, const Rational& mu) {
  if (mu == Rational(g.g))
    throw pole_error("mu_minus has a pole at mu = g = " + mu.str());
  return Rational(g.g) + Rational(g.g) / (mu - Rational(g.g));
}

General3Data general3_data(const Genus& g, const NumClass& c) {
  require_genus_at_least(g, 2, "general3_data");
  Rational mu = slope(c);
  if (!(mu > Rational(g.g) && mu <= Rational(g.g + 1)))
    throw hypothesis_error("general3_data needs slope in (g, g+1], got " + mu.str());
  // partner: rank d - gr, slope mu_minus(mu); its slope lands in [2g, inf),
  // so the minus transform below applies.
  NumClass partner(c.d - g.g * c.r, g.g * c.d - g.g * g.g * c.r + g.g * c.r);
  return {partner, fminus_f0_numerics(g, partner)};
}

PicardNumerics picard_numerics(const Genus& g, const NumClass& c, bool semistable) {
  require_genus_at_least(g, 2, "picard_numerics");
  PicardNumerics out;
  if (!semistable || c.r <= 0) return out;
  Rational mu = slope(c);
  if (mu > Rational(2 * g.g - 2)) {
    out.vanishing = TransformVanishing::e1_zero;
    out.rank0 = chi(g, c);
  } else if (mu < Rational(0)) {
    out.vanishing = TransformVanishing::e0_zero;
    out.rank1 = -chi(g, c);
  }
  if (mu > Rational(2 * g.g - 1)) {
    out.restriction_minus = NumClass(c.d + c.r - g.g * c.r, -g.g * c.r);
    out.theta_slope = slope(*out.restriction_minus);
  } else if (mu < Rational(-1)) {
    out.restriction_plus = NumClass(c.r * (g.g - 1) - c.d, c.r * g.g);
    out.theta_slope = slope(*out.restriction_plus);
  }
  return out;
}

DominanceCertificate certify_f0_slope_dominance(const Genus& g, const NumClass& c) {
  require_genus_at_least(g, 2, "certify_f0_slope_dominance");
  Rational mu = slope(c);
  if (!(mu > Rational(2 * g.g)))
    throw hypothesis_error("certify_f0_slope_dominance needs slope > 2g, got " + mu.str());
  Rational target = -mu / (mu - Rational(g.g));  // slope of the transform
  DominanceCertificate cert;
  cert.pass = true;
  for (Int rp = 1; rp <= c.r; ++rp) {
    for (Int dp = 1; dp <= c.d; ++dp) {
      if (rp == c.r && dp == c.d) continue;
      NumClass sub(rp, dp);
      // Sections of a subsheaf are capped by the strict count test and,
      // inside the classical range, by the middle bound.
      Int h = rp + strict_floor(ct1_rhs(g, mu, sub));
      if (dp <= (2 * g.g - 2) * rp) {
        Int cliff = rp + floor_div(dp, 2);
        if (cliff < h) h = cliff;
      }
      DominanceRow row{sub, h, h > rp, true};
      if (row.checked) {
        // A rank-(h - r') sub of the transform built from this subsheaf
        // would have slope -d'/(h - r'); dominance needs it below target.
        row.ok = Rational(-dp, h - rp) < target;
        if (!row.ok) {
          cert.pass = false;
          if (!cert.violator) cert.violator = sub;
        }
      }
      cert.rows.push_back(row);
    }
  }
  return cert;
}

}  // namespace picnum
