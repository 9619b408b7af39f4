#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "picnum/int128.hpp"

namespace picnum {

// Exact rational number, always stored reduced with positive denominator,
// so operator== is structural equality. No floating point anywhere.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(Int numerator) : num_(numerator), den_(1) {}  // implicit: Int is exact
  Rational(Int numerator, Int denominator);              // reduces; throws on zero denominator

  // Accepts "p", "-p", "p/q", "-p/q" (whitespace-free decimal).
  static Rational parse(std::string_view s);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Int floor() const;
  Int ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" when integral, else "p/q".
  std::string str() const;

 private:
  Int num_;
  Int den_;
};

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace picnum
