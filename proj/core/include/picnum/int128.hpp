#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace picnum {

// All integer quantities in the library (ranks, degrees, Euler
// characteristics, numerators/denominators) use a 128-bit signed integer.
// Documented inputs stay below ~1e6; the widest intermediate the library
// forms is a cross-multiplied comparison of once-composed rationals,
// ~1e36, comfortably inside the ~1.7e38 range.
using Int = __int128;

std::string to_string(Int v);

// Parses an optionally signed decimal integer; throws picnum::error on
// empty/garbage input or overflow past 128 bits.
Int parse_int(std::string_view s);

Int gcd(Int a, Int b);       // non-negative gcd, gcd(0,0) = 0
Int abs(Int a);
Int floor_div(Int a, Int b); // round toward -inf, b != 0
Int ceil_div(Int a, Int b);  // round toward +inf, b != 0

}  // namespace picnum
