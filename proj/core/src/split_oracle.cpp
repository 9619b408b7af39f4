#include "picnum/split_oracle.hpp"

#include <algorithm>

#include "picnum/clifford.hpp"
#include "picnum/errors.hpp"

namespace picnum {

Int LinePiece::degree() const {
  switch (kind_) {
    case Kind::trivial: return 0;
    case Kind::hyper_power: return 2 * param_;
    case Kind::generic: return param_;
  }
  return 0;
}

std::string LinePiece::str() const {
  switch (kind_) {
    case Kind::trivial: return "O";
    case Kind::hyper_power: return "M^" + to_string(param_);
    case Kind::generic: return "G(" + to_string(param_) + ")";
  }
  return "?";
}

std::strong_ordering operator<=>(const LinePiece& x, const LinePiece& y) {
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  if (auto c = static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_); c != 0) return c;
  return x.param_ <=> y.param_;
}

namespace {
void require_oracle_genus(const Genus& g) {
  if (g.g < 2) throw genus_error("the split oracle needs genus >= 2, got " + to_string(g.g));
}
}  // namespace

Int h0_piece(const Genus& g, const LinePiece& p) {
  require_oracle_genus(g);
  switch (p.kind()) {
    case LinePiece::Kind::trivial:
      return 1;
    case LinePiece::Kind::hyper_power: {
      Int a = p.param();
      if (a < 0) return 0;
      if (a <= g.g - 1) return a + 1;  // special range: one section per power step
      return 2 * a + 1 - g.g;          // nonspecial
    }
    case LinePiece::Kind::generic: {
      Int d = p.param();
      Int c = d - g.g + 1;  // chi; a general bundle has no h0 until chi forces it
      return c > 0 ? c : 0;
    }
  }
  return 0;
}

LinePiece serre_dual_piece(const Genus& g, const LinePiece& p) {
  require_oracle_genus(g);
  switch (p.kind()) {
    case LinePiece::Kind::trivial:
      return LinePiece::hyper_power(g.g - 1);  // the canonical bundle
    case LinePiece::Kind::hyper_power:
      return LinePiece::hyper_power(g.g - 1 - p.param());
    case LinePiece::Kind::generic:
      return LinePiece::generic(2 * g.g - 2 - p.param());
  }
  return LinePiece::trivial();
}

Int h1_piece(const Genus& g, const LinePiece& p) {
  return h0_piece(g, serre_dual_piece(g, p));
}

bool globally_generated(const Genus& g, const LinePiece& p) {
  require_oracle_genus(g);
  switch (p.kind()) {
    case LinePiece::Kind::trivial: return true;
    case LinePiece::Kind::hyper_power: return p.param() >= 1;
    case LinePiece::Kind::generic: return p.param() >= g.g + 1;
  }
  return false;
}

SplitBundle::SplitBundle(Genus genus, std::vector<LinePiece> parts)
    : g(genus), pieces(std::move(parts)) {
  require_oracle_genus(g);
  if (pieces.empty()) throw error("split bundle needs at least one piece");
  std::sort(pieces.begin(), pieces.end());
}

Int SplitBundle::degree() const {
  Int d = 0;
  for (const auto& p : pieces) d += p.degree();
  return d;
}

std::string SplitBundle::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += ", ";
    out += pieces[i].str();
  }
  return out + "}";
}

Int bundle_h0(const SplitBundle& b) {
  Int h = 0;
  for (const auto& p : b.pieces) h += h0_piece(b.g, p);
  return h;
}

Int bundle_h1(const SplitBundle& b) {
  Int h = 0;
  for (const auto& p : b.pieces) h += h1_piece(b.g, p);
  return h;
}

SplitBundle serre_dual_bundle(const SplitBundle& b) {
  std::vector<LinePiece> out;
  out.reserve(b.pieces.size());
  for (const auto& p : b.pieces) out.push_back(serre_dual_piece(b.g, p));
  return SplitBundle(b.g, std::move(out));
}

bool globally_generated(const SplitBundle& b) {
  return std::all_of(b.pieces.begin(), b.pieces.end(),
                     [&](const LinePiece& p) { return globally_generated(b.g, p); });
}

HNPolygon bundle_polygon(const SplitBundle& b) {
  std::vector<NumClass> segs;
  segs.reserve(b.pieces.size());
  for (const auto& p : b.pieces) segs.emplace_back(1, p.degree());
  return HNPolygon::merge_equal_slopes(std::move(segs));
}

std::vector<SplitBundle> enumerate_bundles(const Genus& g, Int max_rank, Int deg_lo,
                                           Int deg_hi) {
  require_oracle_genus(g);
  std::vector<LinePiece> universe;
  if (deg_lo <= 0 && 0 <= deg_hi) universe.push_back(LinePiece::trivial());
  for (Int a = ceil_div(deg_lo, 2); 2 * a <= deg_hi; ++a)
    if (a != 0) universe.push_back(LinePiece::hyper_power(a));
  for (Int d = deg_lo; d <= deg_hi; ++d) universe.push_back(LinePiece::generic(d));
  std::sort(universe.begin(), universe.end());

  std::vector<SplitBundle> out;
  std::vector<LinePiece> current;
  // Multisets as non-decreasing index sequences over the universe.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty()) out.emplace_back(g, current);
    if (static_cast<Int>(current.size()) == max_rank) return;
    for (std::size_t i = from; i < universe.size(); ++i) {
      current.push_back(universe[i]);
      self(self, i);
      current.pop_back();
    }
  };
  if (max_rank >= 1) extend(extend, 0);
  // Group by rank, keeping lexicographic order inside each rank.
  std::stable_sort(out.begin(), out.end(),
                   [](const SplitBundle& a, const SplitBundle& b) { return a.rank() < b.rank(); });
  return out;
}

VerifyReport verify_bundle(const SplitBundle& b) {
  const Genus& g = b.g;
  VerifyReport rep;
  rep.rank = b.rank();
  rep.degree = b.degree();
  rep.h0 = bundle_h0(b);
  rep.h1 = bundle_h1(b);
  rep.chi_value = chi(g, NumClass(rep.rank, rep.degree));
  rep.ok = true;

  auto record = [&](const std::string& name, bool applicable, bool passed,
                    const std::string& data) {
    rep.checks.push_back({name, applicable, !applicable || passed});
    if (applicable && !passed && rep.ok) {
      rep.ok = false;
      rep.failure = name + " failed for " + b.str() + " (genus " + to_string(g.g) +
                    "): " + data;
    }
  };

  record("riemann_roch", true, rep.h0 - rep.h1 == rep.chi_value,
         "h0=" + to_string(rep.h0) + " h1=" + to_string(rep.h1) +
             " chi=" + to_string(rep.chi_value));
  Int dual_h0 = bundle_h0(serre_dual_bundle(b));
  record("serre_duality", true, rep.h1 == dual_h0,
         "h1=" + to_string(rep.h1) + " dual h0=" + to_string(dual_h0));

  HNPolygon poly = bundle_polygon(b);
  bool hyp = clifford_hypotheses(g, poly);
  record("clifford_inequality", hyp, 2 * (rep.h0 - rep.rank) <= rep.degree,
         "h0-r=" + to_string(rep.h0 - rep.rank) + " d=" + to_string(rep.degree));
  CliffordReport bound = h0_upper_bound(g, poly);
  record("upper_bound", true, rep.h0 <= bound.bound,
         "h0=" + to_string(rep.h0) + " bound=" + to_string(bound.bound));

  bool strict = clifford_hypotheses_strict(g, poly);
  bool equality = 2 * (rep.h0 - rep.rank) == rep.degree;
  bool all_hyper_mid = std::all_of(b.pieces.begin(), b.pieces.end(), [&](const LinePiece& p) {
    return p.kind() == LinePiece::Kind::hyper_power && 0 < p.param() &&
           p.param() < g.g - 1;
  });
  record("equality_classification", strict && equality, all_hyper_mid,
         "equality met by " + b.str());
  return rep;
}

}  // namespace picnum
