#pragma once

#include <string>
#include <vector>

#include "picnum/fourier_mukai.hpp"
#include "picnum/popa.hpp"

namespace picnum {

// What is assumed about a bundle of the given numerical class:
//   stable / semistable     the queried bundle has that property
//   exists_semistable       only that some semistable bundle of this slope
//                           is sought (existence statements)
enum class Assumption { stable, semistable, exists_semistable };

// Strongest supported conclusion about the two Picard-side sheaves E0/E1:
//   E0_stable, E0_semistable        E0 is (semi)stable, E1 = 0
//   E1_stable, E1_semistable        E1 is (semi)stable, E0 = 0
//   E0_semistable_exists            some semistable bundle of this slope
//                                   (of an effective rank) has semistable E0
//   E1_semistable_exists            same for E1
//   conditional                     (semi)stability of one side holds under a
//                                   stated cohomology side condition
//   unknown                         nothing applies
enum class Conclusion {
  E0_stable,
  E0_semistable,
  E1_stable,
  E1_semistable,
  E0_semistable_exists,
  E1_semistable_exists,
  conditional,
  unknown,
};

const char* conclusion_name(Conclusion c);
Conclusion mirror_conclusion(Conclusion c);  // E0 <-> E1, fixes conditional/unknown

struct Verdict {
  std::string regime;      // slope window tag, e.g. "mu > 2g-1"
  Conclusion conclusion = Conclusion::unknown;
  std::string detail;      // one-line statement of the conclusion ("" if unknown)
  PicardNumerics picard;   // transform data valid under the assumption
  std::string citation;    // exactly one per non-unknown conclusion, else ""
  std::vector<std::string> caveats;
  std::optional<GuaranteedRanks> popa;  // filled for existence verdicts
};

// Decision table on mu = d/r. Requires g >= 2, r >= 1.
Verdict classify(const Genus& g, const NumClass& c, Assumption assumption);

// True iff classify at c and at serre_twist(g, c) give mirrored conclusions
// (E0 <-> E1) and swapped determined ranks, for all three assumptions.
bool duality_check(const Genus& g, const NumClass& c);

}  // namespace picnum
