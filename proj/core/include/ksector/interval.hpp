#pragma once

#include "ksector/errors.hpp"

namespace ksector {

/// Closed real interval [lo, hi] with finite double endpoints.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;

  RealInterval() = default;
  RealInterval(double lo, double hi);

  /// Zero-width interval [v, v] representing an exact value.
  static RealInterval point(double v) { return RealInterval(v, v); }

  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] double midpoint() const { return 0.5 * (lo + hi); }
  [[nodiscard]] bool is_point() const { return lo == hi; }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }

  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// Rectangle re + i*im in the complex plane; one interval coefficient.
struct ComplexIntervalBox {
  RealInterval re;
  RealInterval im;

  [[nodiscard]] bool is_point() const { return re.is_point() && im.is_point(); }

  friend bool operator==(const ComplexIntervalBox&,
                         const ComplexIntervalBox&) = default;
};

/// Scalar-interval product x*[y]: [x*lo, x*hi] for x >= 0, endpoints swapped
/// for x < 0.
RealInterval scale(double x, const RealInterval& y);

/// Endpoint-wise interval sum.
RealInterval add(const RealInterval& u, const RealInterval& v);

/// True iff the origin lies in the rectangle (both component intervals
/// straddle zero, endpoints included).
bool contains_zero(const ComplexIntervalBox& b);

}  // namespace ksector
