#pragma once

#include <optional>

#include "picnum/rational.hpp"

namespace picnum {

struct Genus;

// Effective rank threshold P(r,h) = 2h * ceil((h^2 r^2 + 1)/(8h)).
// Always a positive multiple of 2h and at least (h^2 r^2 + 1)/4.
// Requires r >= 1, h >= 1.
Int popa_P(Int r, Int h);

// Which existence statement covers a slope:
//   f0_exists              mu in (g-1, g]: some semistable bundle of this
//                          slope has a semistable degree-0 transform
//   f1_exists              mu in [g-2, g-1): same for the degree-1 transform
//   fminus_sum_semistable  mu in (g, g+1]: the minus transform of some
//                          semistable bundle is a sum of semistable pieces
//   not_covered            anything else (including mu = g-1 exactly)
enum class PopaRegime { f0_exists, f1_exists, fminus_sum_semistable, not_covered };

// mu is put in lowest terms d/r first; the guaranteed construction then
// needs k >= popa_P(r, g) copies, total rank R = k r.
struct GuaranteedRanks {
  Int r_reduced;
  PopaRegime regime;
  std::optional<Int> k_min;  // popa_P(r_reduced, g) when covered
  std::optional<Int> R_min;  // k_min * r_reduced when covered
};

// Requires g >= 2.
GuaranteedRanks guaranteed_ranks(const Genus& g, const Rational& mu);

}  // namespace picnum
