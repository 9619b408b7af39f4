#include "picnum/classifier.hpp"
#include "picnum/errors.hpp"
#include "test_util.hpp"

using picnum::Assumption;
using picnum::Conclusion;
using picnum::Genus;
using picnum::Int;
using picnum::NumClass;
using picnum::Rational;
using picnum::Verdict;

TEST_CASE("pinned verdicts across the decision table") {
  const Genus g2(2);

  const Verdict high = classify(g2, NumClass(1, 4), Assumption::stable);
  CHECK(high.conclusion == Conclusion::E0_stable);
  CHECK(high.regime == "mu > 2g-1");
  REQUIRE(high.picard.rank0.has_value());
  CHECK(*high.picard.rank0 == Int(3));
  REQUIRE(high.picard.restriction_minus.has_value());
  CHECK(*high.picard.restriction_minus == NumClass(3, -2));

  const Verdict low = classify(g2, NumClass(2, -2), Assumption::semistable);
  CHECK(low.conclusion == Conclusion::E1_semistable);
  REQUIRE(low.picard.rank1.has_value());
  CHECK(*low.picard.rank1 == Int(4));

  const Verdict exists = classify(Genus(3), NumClass(2, 5), Assumption::exists_semistable);
  CHECK(exists.conclusion == Conclusion::E0_semistable_exists);
  REQUIRE(exists.popa.has_value());
  REQUIRE(exists.popa->R_min.has_value());
  CHECK(*exists.popa->R_min == Int(24));
}

TEST_CASE("boundary rows pin the transform rank to g*rk") {
  for (long long gg = 2; gg <= 6; ++gg) {
    const Genus g(gg);
    for (long long r = 1; r <= 5; ++r) {
      const Verdict top = classify(g, NumClass(r, (2 * gg - 1) * r), Assumption::semistable);
      CHECK(top.conclusion == Conclusion::E0_semistable);
      CHECK(top.regime == "mu = 2g-1");
      REQUIRE(top.picard.rank0.has_value());
      CHECK(*top.picard.rank0 == Int(gg * r));

      const Verdict bot = classify(g, NumClass(r, -r), Assumption::semistable);
      CHECK(bot.conclusion == Conclusion::E1_semistable);
      CHECK(bot.regime == "mu = -1");
      REQUIRE(bot.picard.rank1.has_value());
      CHECK(*bot.picard.rank1 == Int(gg * r));
    }
  }
}

TEST_CASE("stable assumption only strengthens at strict slopes") {
  const Genus g2(2);
  // At the slope-(2g-1) boundary only the semistable statement exists.
  CHECK(classify(g2, NumClass(1, 3), Assumption::stable).conclusion ==
        Conclusion::E0_semistable);
  CHECK(classify(g2, NumClass(1, -1), Assumption::stable).conclusion ==
        Conclusion::E1_semistable);
  CHECK(classify(g2, NumClass(1, -2), Assumption::stable).conclusion ==
        Conclusion::E1_stable);
  CHECK(classify(g2, NumClass(1, -2), Assumption::semistable).conclusion ==
        Conclusion::E1_semistable);
}

TEST_CASE("conditional rows at slope g-2 and its reflection g") {
  const Genus g3(3);
  const Verdict cond = classify(g3, NumClass(1, 1), Assumption::semistable);
  CHECK(cond.conclusion == Conclusion::conditional);
  CHECK(cond.regime == "mu = g-2");
  CHECK(cond.caveats.size() >= 1);

  const Verdict mirror = classify(g3, NumClass(1, 3), Assumption::semistable);
  CHECK(mirror.conclusion == Conclusion::conditional);
  CHECK(mirror.regime == "mu = g");
}

TEST_CASE("the slope g-1 gap and the open window stay unknown") {
  for (long long gg = 2; gg <= 6; ++gg) {
    const Genus g(gg);
    for (long long r = 1; r <= 4; ++r) {
      for (Assumption a : {Assumption::stable, Assumption::semistable,
                           Assumption::exists_semistable}) {
        const Verdict v = classify(g, NumClass(r, (gg - 1) * r), a);
        CHECK(v.conclusion == Conclusion::unknown);
        CHECK(v.regime == "mu = g-1");
        CHECK(v.citation.empty());
      }
    }
  }
  // Open window (g, 2g-1): unknown, but vanishing data is still filled
  // above slope 2g-2.
  const Verdict open = classify(Genus(3), NumClass(2, 9), Assumption::semistable);
  CHECK(open.conclusion == Conclusion::unknown);
  CHECK(open.regime == "mu in (g..2g-1)");
  REQUIRE(open.picard.rank0.has_value());
  CHECK(*open.picard.rank0 == Int(5));
}

TEST_CASE("existence assumption outside its windows concludes nothing") {
  const Genus g2(2);
  CHECK(classify(g2, NumClass(1, 4), Assumption::exists_semistable).conclusion ==
        Conclusion::unknown);
  CHECK(classify(g2, NumClass(1, -3), Assumption::exists_semistable).conclusion ==
        Conclusion::unknown);
  // Existence windows: (g-1, g] on the E0 side, [g-2, g-1) on the E1 side.
  CHECK(classify(g2, NumClass(1, 2), Assumption::exists_semistable).conclusion ==
        Conclusion::E0_semistable_exists);
  CHECK(classify(g2, NumClass(1, 0), Assumption::exists_semistable).conclusion ==
        Conclusion::E1_semistable_exists);
}

TEST_CASE("every non-unknown verdict carries exactly one citation") {
  for (long long gg = 2; gg <= 4; ++gg) {
    const Genus g(gg);
    for (long long r = 1; r <= 3; ++r)
      for (long long d = -4 * gg * r; d <= 4 * gg * r; ++d)
        for (Assumption a : {Assumption::stable, Assumption::semistable,
                             Assumption::exists_semistable}) {
          const Verdict v = classify(g, NumClass(r, d), a);
          CHECK((v.conclusion == Conclusion::unknown) == v.citation.empty());
          if (v.picard.rank0) CHECK(*v.picard.rank0 == chi(g, NumClass(r, d)));
          if (v.picard.rank1) CHECK(*v.picard.rank1 == -chi(g, NumClass(r, d)));
        }
  }
}

TEST_CASE("verdicts mirror under the slope reflection") {
  const Genus g2(2);
  CHECK(classify(g2, NumClass(1, 4), Assumption::stable).conclusion ==
        Conclusion::E0_stable);
  CHECK(classify(g2, serre_twist(g2, NumClass(1, 4)), Assumption::stable).conclusion ==
        Conclusion::E1_stable);
  CHECK(serre_twist(g2, NumClass(1, 4)) == NumClass(1, -2));

  const Verdict b0 = classify(g2, NumClass(1, 3), Assumption::semistable);
  const Verdict b1 = classify(g2, NumClass(1, -1), Assumption::semistable);
  CHECK(*b0.picard.rank0 == Int(2));
  CHECK(*b1.picard.rank1 == Int(2));

  CHECK(duality_check(g2, NumClass(1, 4)));
  CHECK(duality_check(Genus(3), NumClass(2, 5)));
  for (long long d = -14; d <= 14; ++d) CHECK(duality_check(Genus(3), NumClass(2, d)));
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS(classify(Genus(1), NumClass(1, 0), Assumption::stable),
                  picnum::genus_error);
  CHECK_THROWS_AS(classify(Genus(2), NumClass(0, 1), Assumption::stable),
                  picnum::error);
}
