#pragma once

#include <optional>
#include <vector>

#include "picnum/numclass.hpp"

namespace picnum {

// Rank and degree on the Picard side of the integral transform.
struct FMNumerics {
  Int R;
  Int D;
  friend bool operator==(const FMNumerics&, const FMNumerics&) = default;
};

// (r, d) |-> (d - g r, -d). Linear, and invertible for g >= 1.
FMNumerics fm_matrix(const Genus& g, const NumClass& c);

// Inverse of fm_matrix. Throws genus_error at g = 0 (the matrix is
// singular) and inconsistent_error when (R, D) is not in the image lattice
// or the recovered class is not a sheaf class.
NumClass fm_matrix_inverse(const Genus& g, const FMNumerics& v);

// Numerical class of the degree-0 term of the "minus" transform of a
// bundle with slope > 2g-2 (where the transform is a single bundle):
// (d - g r, -d). Requires g >= 1 and positive transformed rank.
NumClass fminus_f0_numerics(const Genus& g, const NumClass& c);

// Numerical class of the degree-1 term of the "plus" transform of a
// bundle with slope < -2: (r(g-2) - d, r(2g-2) - d). Requires g >= 1.
NumClass fplus_f1_numerics(const Genus& g, const NumClass& c);

// The slope involution mu |-> g + g/(mu - g). Defined for every genus;
// throws pole_error at mu = g. An involution for g >= 1 (at g = 0 the map
// is constantly 0).
Rational mu_minus(const Genus& g, const Rational& mu);

// For slope in (g, g+1]: the partner class of rank d - gr whose slope is
// mu_minus(mu), together with the degree-0 "minus" transform of that
// partner. Requires g >= 2.
struct General3Data {
  NumClass partner;
  NumClass f0;
};
General3Data general3_data(const Genus& g, const NumClass& c);

// Which of the two transform terms of a semistable bundle is known to vanish.
enum class TransformVanishing { none_known, e1_zero, e0_zero };

// Everything the transform determines about the two Picard-side sheaves
// E0/E1 of a bundle from (g, r, d) and a semistability assumption alone.
struct PicardNumerics {
  TransformVanishing vanishing = TransformVanishing::none_known;
  std::optional<Int> rank0;                  // rank of E0 when determined (then E1 = 0)
  std::optional<Int> rank1;                  // rank of E1 when determined (then E0 = 0)
  std::optional<NumClass> restriction_minus; // E0 restricted to an embedded curve, slope > 2g-1
  std::optional<NumClass> restriction_plus;  // E1 restricted to an embedded curve, slope < -1
  std::optional<Rational> theta_slope;       // slope of that restriction, g/(g-1-mu)
};

// Requires g >= 2. With semistable = false nothing is determined.
PicardNumerics picard_numerics(const Genus& g, const NumClass& c, bool semistable);

// One row of the slope-dominance certificate: the candidate subsheaf class,
// the largest section count any subsheaf of that class can have, and the
// slope comparison outcome (vacuous when h_max = r').
struct DominanceRow {
  NumClass sub;
  Int h_max;
  bool checked;
  bool ok;
};

struct DominanceCertificate {
  bool pass;
  std::vector<DominanceRow> rows;
  std::optional<NumClass> violator;  // first failing subsheaf class, if any
};

// Exhaustive check that no subsheaf class (r', d') with 1 <= r' <= r,
// 1 <= d' <= d can destabilize the degree-0 transform of a semistable
// bundle of class (r, d): the section-count ceiling forces every candidate
// sub of the transform to have slope strictly below -mu/(mu - g).
// Requires g >= 2 and slope > 2g.
DominanceCertificate certify_f0_slope_dominance(const Genus& g, const NumClass& c);

}  // namespace picnum
