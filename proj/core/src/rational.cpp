#include "picnum/rational.hpp"

#include "picnum/errors.hpp"

namespace picnum {

namespace {

constexpr Int kIntMax = (~(static_cast<unsigned __int128>(0)) >> 1);

}  // namespace

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Peel digits off the unsigned magnitude so INT128_MIN is handled too.
  unsigned __int128 mag = neg ? -(static_cast<unsigned __int128>(v)) : v;
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (neg) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

Int parse_int(std::string_view s) {
  if (s.empty()) throw error("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw error("sign without digits in integer literal");
  unsigned __int128 mag = 0;
  const unsigned __int128 limit =
      static_cast<unsigned __int128>(kIntMax) + (neg ? 1 : 0);
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9')
      throw error("invalid character in integer literal: '" + std::string(s) + "'");
    mag = mag * 10 + static_cast<unsigned>(c - '0');
    if (mag > limit) throw error("integer literal out of 128-bit range");
  }
  return neg ? -static_cast<Int>(mag) : static_cast<Int>(mag);
}

Int abs(Int a) { return a < 0 ? -a : a; }

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Int g = picnum::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Int Rational::floor() const { return floor_div(num_, den_); }
Int Rational::ceil() const { return ceil_div(num_, den_); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = Rational(num_ * o.num_, den_ * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw error("rational division by zero");
  return *this = Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return picnum::to_string(num_);
  return picnum::to_string(num_) + "/" + picnum::to_string(den_);
}

}  // namespace picnum
