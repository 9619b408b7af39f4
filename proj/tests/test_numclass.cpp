#include <random>

#include "picnum/errors.hpp"
#include "picnum/numclass.hpp"
#include "test_util.hpp"

using picnum::Genus;
using picnum::Int;
using picnum::NumClass;
using picnum::Rational;

TEST_CASE("class validation: rank >= 0, torsion has non-negative degree") {
  CHECK_NOTHROW(NumClass(0, 3));
  CHECK_THROWS_AS(NumClass(-1, 0), picnum::error);
  CHECK_THROWS_AS(NumClass(0, -2), picnum::error);
  CHECK_THROWS_AS(Genus(-1), picnum::genus_error);
  CHECK(NumClass(2, -5).str() == "(2,-5)");
}

TEST_CASE("slope examples and the rank-zero rejection") {
  CHECK(slope(NumClass(1, 0)) == Rational(0));
  CHECK(slope(NumClass(2, -2)) == Rational(-1));
  CHECK(slope(NumClass(3, 5)) == Rational(5, 3));
  CHECK_THROWS_AS(slope(NumClass(0, 3)), picnum::slope_error);
}

TEST_CASE("chi = d + r(1-g) on pinned values") {
  CHECK(chi(Genus(2), NumClass(1, 0)) == Int(-1));
  CHECK(chi(Genus(3), NumClass(1, 4)) == Int(2));
  CHECK(chi(Genus(2), NumClass(2, -2)) == Int(-4));
  CHECK(chi(Genus(0), NumClass(2, 0)) == Int(2));
}

TEST_CASE("tensor product of classes") {
  CHECK(tensor(NumClass(2, 1), NumClass(3, 2)) == NumClass(6, 7));
  CHECK(tensor(NumClass(1, 5), NumClass(1, -2)) == NumClass(1, 3));
  CHECK_THROWS_AS(tensor(NumClass(0, 1), NumClass(1, 1)), picnum::slope_error);
}

TEST_CASE("dual and twist") {
  CHECK(dual(NumClass(5, 7)) == NumClass(5, -7));
  CHECK(dual(dual(NumClass(5, 7))) == NumClass(5, 7));
  CHECK(twist(NumClass(3, 1), 2) == NumClass(3, 7));
  CHECK(twist(NumClass(3, 1), -1) == NumClass(3, -2));
  CHECK_THROWS_AS(dual(NumClass(0, 0)), picnum::slope_error);
}

TEST_CASE("serre twist: pinned values and slope reflection") {
  CHECK(serre_twist(Genus(2), NumClass(1, 1)) == NumClass(1, 1));  // fixed point
  CHECK(serre_twist(Genus(3), NumClass(2, 10)) == NumClass(2, -2));
  const Genus g(5);
  const NumClass c(3, 4);
  CHECK(serre_twist(g, serre_twist(g, c)) == c);  // involution
  CHECK(slope(serre_twist(g, c)) + slope(c) == Rational(2 * 5 - 2));
}

TEST_CASE("random identities: chi of tensor, twist as tensor, serre slope sum") {
  std::mt19937_64 rng(20240818);
  std::uniform_int_distribution<long long> rk(1, 9);
  std::uniform_int_distribution<long long> dg(-40, 40);
  std::uniform_int_distribution<long long> gs(0, 7);
  for (int i = 0; i < 2000; ++i) {
    const Genus g(gs(rng));
    const NumClass a(rk(rng), dg(rng));
    const NumClass b(rk(rng), dg(rng));
    // chi(a (x) b) = r_b chi(a) + r_a chi(b) - r_a r_b (1-g)
    CHECK(chi(g, tensor(a, b)) ==
          b.r * chi(g, a) + a.r * chi(g, b) - a.r * b.r * (1 - g.g));
    const Int n = dg(rng);
    CHECK(twist(a, n) == tensor(a, NumClass(1, n)));
    CHECK(serre_twist(g, a) == twist(dual(a), 2 * g.g - 2) );
    CHECK(chi(g, a) + chi(g, serre_twist(g, a)) == Int(0));  // duality pairing
  }
}
