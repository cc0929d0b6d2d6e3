#include "ksector/interval.hpp"

#include <cmath>
#include <string>

namespace ksector {

RealInterval::RealInterval(double lo, double hi) : lo(lo), hi(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ValidationError("interval endpoints must be finite, got [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (lo > hi) {
    throw ValidationError("interval endpoints out of order: lo=" +
                          std::to_string(lo) + " > hi=" + std::to_string(hi));
  }
}

RealInterval scale(double x, const RealInterval& y) {
  if (!std::isfinite(x)) {
    throw ValidationError("scale factor must be finite");
  }
  // x == -0.0 takes the x >= 0 branch; both products are then -0.0 and the
  // lo <= hi invariant still holds.
  if (x >= 0.0) {
    return RealInterval(x * y.lo, x * y.hi);
  }
  return RealInterval(x * y.hi, x * y.lo);
}

RealInterval add(const RealInterval& u, const RealInterval& v) {
  return RealInterval(u.lo + v.lo, u.hi + v.hi);
}

bool contains_zero(const ComplexIntervalBox& b) {
  return b.re.contains(0.0) && b.im.contains(0.0);
}

}  // namespace ksector
