#pragma once

#include <string>

#include "doctest.h"
#include "picnum/numclass.hpp"
#include "picnum/polygon.hpp"

// Readable failure output for the exact types.
namespace doctest {

template <>
struct StringMaker<__int128> {
  static String convert(const __int128& v) { return picnum::to_string(v).c_str(); }
};

template <>
struct StringMaker<picnum::Rational> {
  static String convert(const picnum::Rational& q) { return q.str().c_str(); }
};

template <>
struct StringMaker<picnum::NumClass> {
  static String convert(const picnum::NumClass& c) { return c.str().c_str(); }
};

template <>
struct StringMaker<picnum::HNPolygon> {
  static String convert(const picnum::HNPolygon& p) { return p.str().c_str(); }
};

}  // namespace doctest
