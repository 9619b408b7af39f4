#include <random>
#include <vector>

#include "picnum/errors.hpp"
#include "picnum/polygon.hpp"
#include "test_util.hpp"

using picnum::Genus;
using picnum::HNPolygon;
using picnum::Int;
using picnum::NumClass;
using picnum::Rational;

TEST_CASE("strict constructor accepts strictly decreasing slopes only") {
  CHECK_NOTHROW(HNPolygon({NumClass(1, 3), NumClass(2, 1), NumClass(1, -2)}));
  CHECK_THROWS_AS(HNPolygon({}), picnum::polygon_error);
  CHECK_THROWS_AS(HNPolygon({NumClass(0, 1)}), picnum::polygon_error);
  // Equal slopes 2 = 2 must be merged by the caller.
  CHECK_THROWS_AS(HNPolygon({NumClass(2, 4), NumClass(3, 6)}), picnum::polygon_error);
  CHECK_THROWS_AS(HNPolygon({NumClass(1, 0), NumClass(1, 1)}), picnum::polygon_error);
}

TEST_CASE("merge_equal_slopes sorts descending and merges ties") {
  const auto p = HNPolygon::merge_equal_slopes(
      {NumClass(1, 0), NumClass(2, 4), NumClass(3, 6), NumClass(1, -1)});
  CHECK(p.segments() == std::vector<NumClass>{NumClass(5, 10), NumClass(1, 0), NumClass(1, -1)});
  CHECK_THROWS_AS(HNPolygon::merge_equal_slopes({}), picnum::polygon_error);
  CHECK_THROWS_AS(HNPolygon::merge_equal_slopes({NumClass(0, 2)}), picnum::polygon_error);
}

TEST_CASE("totals and slope extremes") {
  const HNPolygon p({NumClass(1, 3), NumClass(2, 1), NumClass(1, -2)});
  CHECK(p.total() == NumClass(4, 2));
  CHECK(p.mu_max() == Rational(3));
  CHECK(p.mu_min() == Rational(-2));
  CHECK(p.str() == "[(1,3),(2,1),(1,-2)]");
  const HNPolygon single({NumClass(3, 5)});
  CHECK(single.mu_max() == single.mu_min());
}

TEST_CASE("serre dual polygon: pinned example, involution, slope reflection") {
  const Genus g2(2);
  const HNPolygon p({NumClass(1, 3), NumClass(1, 1)});
  const HNPolygon d = polygon_serre_dual(g2, p);
  CHECK(d.segments() == std::vector<NumClass>{NumClass(1, 1), NumClass(1, -1)});

  std::mt19937_64 rng(20240819);
  std::uniform_int_distribution<long long> rk(1, 5);
  std::uniform_int_distribution<long long> dg(-20, 20);
  std::uniform_int_distribution<long long> gs(0, 6);
  std::uniform_int_distribution<int> len(1, 5);
  int built = 0;
  while (built < 500) {
    const Genus g(gs(rng));
    std::vector<NumClass> segs;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) segs.emplace_back(rk(rng), dg(rng));
    HNPolygon q = [&] {
      return HNPolygon::merge_equal_slopes(segs);
    }();
    ++built;
    const HNPolygon qd = polygon_serre_dual(g, q);
    CHECK(polygon_serre_dual(g, qd) == q);
    CHECK(qd.mu_max() == Rational(2 * g.g - 2) - q.mu_min());
    CHECK(qd.mu_min() == Rational(2 * g.g - 2) - q.mu_max());
    CHECK(qd.total() == serre_twist(g, q.total()));
  }
}
