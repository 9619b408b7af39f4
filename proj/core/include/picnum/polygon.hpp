#pragma once

#include <vector>

#include "picnum/numclass.hpp"

namespace picnum {

// Slope polygon of a filtered bundle: the list of graded pieces
// (r_i, d_i), every rank positive, slopes d_i/r_i strictly decreasing.
class HNPolygon {
 public:
  // Validates the segment list as-is; throws polygon_error if it is empty,
  // a rank is non-positive, or the slopes are not strictly decreasing.
  explicit HNPolygon(std::vector<NumClass> segments);

  // Normalizing constructor: sorts by slope (descending) and merges
  // segments of equal slope, then validates. Accepts any non-empty list of
  // positive-rank classes.
  static HNPolygon merge_equal_slopes(std::vector<NumClass> segments);

  const std::vector<NumClass>& segments() const { return segments_; }
  Rational mu_max() const;  // slope of the first segment
  Rational mu_min() const;  // slope of the last segment
  NumClass total() const;   // sum of all segments

  friend bool operator==(const HNPolygon&, const HNPolygon&) = default;
  std::string str() const;  // "[(r1,d1),(r2,d2),...]"

 private:
  std::vector<NumClass> segments_;
};

// Segment-wise serre_twist with the order reversed (twisting flips slope
// order). The polygon of the Serre-dual filtration.
HNPolygon polygon_serre_dual(const Genus& g, const HNPolygon& p);

}  // namespace picnum
