#include "picnum/polygon.hpp"

#include <algorithm>

#include "picnum/errors.hpp"

namespace picnum {

HNPolygon::HNPolygon(std::vector<NumClass> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw polygon_error("polygon needs at least one segment");
  for (const auto& s : segments_)
    if (s.r <= 0)
      throw polygon_error("polygon segment must have positive rank, got " + s.str());
  for (std::size_t i = 1; i < segments_.size(); ++i)
    if (!(slope(segments_[i - 1]) > slope(segments_[i])))
      throw polygon_error("polygon slopes must strictly decrease at segment " +
                          segments_[i].str());
}

HNPolygon HNPolygon::merge_equal_slopes(std::vector<NumClass> segments) {
  if (segments.empty()) throw polygon_error("polygon needs at least one segment");
  for (const auto& s : segments)
    if (s.r <= 0)
      throw polygon_error("polygon segment must have positive rank, got " + s.str());
  std::sort(segments.begin(), segments.end(),
            [](const NumClass& a, const NumClass& b) { return slope(a) > slope(b); });
  std::vector<NumClass> merged;
  for (const auto& s : segments) {
    if (!merged.empty() && slope(merged.back()) == slope(s))
      merged.back() = NumClass(merged.back().r + s.r, merged.back().d + s.d);
    else
      merged.push_back(s);
  }
  return HNPolygon(std::move(merged));
}

Rational HNPolygon::mu_max() const { return slope(segments_.front()); }
Rational HNPolygon::mu_min() const { return slope(segments_.back()); }

NumClass HNPolygon::total() const {
  Int r = 0, d = 0;
  for (const auto& s : segments_) {
    r += s.r;
    d += s.d;
  }
  return NumClass(r, d);
}

std::string HNPolygon::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ",";
    out += segments_[i].str();
  }
  return out + "]";
}

HNPolygon polygon_serre_dual(const Genus& g, const HNPolygon& p) {
  std::vector<NumClass> out;
  out.reserve(p.segments().size());
  for (auto it = p.segments().rbegin(); it != p.segments().rend(); ++it)
    out.push_back(serre_twist(g, *it));
  return HNPolygon(std::move(out));
}

}  // namespace picnum
