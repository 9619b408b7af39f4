#include "picnum/numclass.hpp"

#include "picnum/errors.hpp"

namespace picnum {

Genus::Genus(Int genus) : g(genus) {
  if (genus < 0) throw genus_error("genus must be non-negative, got " + to_string(genus));
}

NumClass::NumClass(Int rank, Int degree) : r(rank), d(degree) {
  if (rank < 0) throw slope_error("rank must be non-negative, got " + to_string(rank));
  if (rank == 0 && degree < 0)
    throw slope_error("rank-zero class needs non-negative degree, got " + to_string(degree));
}

std::string NumClass::str() const {
  return "(" + to_string(r) + "," + to_string(d) + ")";
}

Rational slope(const NumClass& c) {
  if (c.r == 0) throw slope_error("slope undefined for rank-zero class " + c.str());
  return Rational(c.d, c.r);
}

Int chi(const Genus& g, const NumClass& c) { return c.d + c.r * (1 - g.g); }

namespace {
void require_positive_rank(const NumClass& c, const char* op) {
  if (c.r <= 0)
    throw slope_error(std::string(op) + " needs positive rank, got " + c.str());
}
}  // namespace

NumClass tensor(const NumClass& a, const NumClass& b) {
  require_positive_rank(a, "tensor");
  require_positive_rank(b, "tensor");
  return NumClass(a.r * b.r, a.r * b.d + b.r * a.d);
}

NumClass dual(const NumClass& c) {
  require_positive_rank(c, "dual");
  return NumClass(c.r, -c.d);
}

NumClass serre_twist(const Genus& g, const NumClass& c) {
  require_positive_rank(c, "serre_twist");
  return NumClass(c.r, c.r * (2 * g.g - 2) - c.d);
}

NumClass twist(const NumClass& c, Int n) {
  require_positive_rank(c, "twist");
  return NumClass(c.r, c.d + n * c.r);
}

}  // namespace picnum
