#pragma once

#include <compare>
#include <string>
#include <vector>

#include "picnum/polygon.hpp"

namespace picnum {

// One line-bundle summand on a hyperelliptic curve of genus g:
//   trivial      the structure sheaf (one section)
//   hyper_power  the a-th power of the degree-2 line bundle of the double
//                cover, degree 2a; realizes the middle-bound equality
//   generic      a general line bundle of the given degree (no sections
//                until the degree forces them)
// hyper_power(0) is the trivial piece and is canonicalized to it.
class LinePiece {
 public:
  enum class Kind { trivial, hyper_power, generic };

  static LinePiece trivial() { return LinePiece(Kind::trivial, 0); }
  static LinePiece hyper_power(Int a) {
    return a == 0 ? trivial() : LinePiece(Kind::hyper_power, a);
  }
  static LinePiece generic(Int d) { return LinePiece(Kind::generic, d); }

  Kind kind() const { return kind_; }
  Int param() const { return param_; }  // a / d / 0
  Int degree() const;
  std::string str() const;  // "O", "M^a", "G(d)"

  friend bool operator==(const LinePiece&, const LinePiece&) = default;
  // Canonical order: by degree, then kind, then parameter. Enumeration and
  // bundle normalization both use it, so reports are deterministic.
  friend std::strong_ordering operator<=>(const LinePiece& x, const LinePiece& y);

 private:
  LinePiece(Kind k, Int p) : kind_(k), param_(p) {}
  Kind kind_;
  Int param_;
};

Int h0_piece(const Genus& g, const LinePiece& p);            // g >= 2
LinePiece serre_dual_piece(const Genus& g, const LinePiece& p);
Int h1_piece(const Genus& g, const LinePiece& p);            // = h0 of the dual piece

// Base-point-freeness marking used only to select inputs for the strict
// section-count tests: trivial, hyper_power(a >= 1), generic(d >= g+1).
// A modeling assumption, echoed as a caveat by report emitters.
bool globally_generated(const Genus& g, const LinePiece& p);

// A direct sum of line pieces; pieces are kept canonically sorted.
struct SplitBundle {
  Genus g;
  std::vector<LinePiece> pieces;

  SplitBundle(Genus genus, std::vector<LinePiece> parts);  // g >= 2, non-empty

  Int rank() const { return static_cast<Int>(pieces.size()); }
  Int degree() const;
  std::string str() const;  // "{O, M^2, G(3)}"
};

Int bundle_h0(const SplitBundle& b);
Int bundle_h1(const SplitBundle& b);
SplitBundle serre_dual_bundle(const SplitBundle& b);
bool globally_generated(const SplitBundle& b);

// Pieces grouped by degree (a line piece's slope is its degree), merged and
// sorted by decreasing slope.
HNPolygon bundle_polygon(const SplitBundle& b);

// Every multiset of pieces with 1 <= rank <= max_rank and each piece degree
// in [deg_lo, deg_hi], each exactly once, in canonical order: by rank, then
// lexicographically in the canonical piece order. Deterministic.
std::vector<SplitBundle> enumerate_bundles(const Genus& g, Int max_rank, Int deg_lo,
                                           Int deg_hi);

struct OracleCheck {
  std::string name;
  bool applicable;
  bool passed;  // true when not applicable
};

struct VerifyReport {
  bool ok;  // every applicable check passed
  Int h0, h1, chi_value, rank, degree;
  std::vector<OracleCheck> checks;
  std::string failure;  // first failing check with data, "" when ok
};

// Checks, in order: h0 - h1 = chi; h1 = h0 of the Serre-dual bundle; the
// middle bound h0 - r <= floor(d/2) when the polygon hypotheses hold; h0
// within h0_upper_bound of the polygon; and, under strict hypotheses, the
// equality h0 - r = d/2 only for bundles whose pieces are all hyper_power(a)
// with 0 < a < g-1.
VerifyReport verify_bundle(const SplitBundle& b);

}  // namespace picnum
