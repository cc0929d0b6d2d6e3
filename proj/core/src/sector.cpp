#include "ksector/sector.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace ksector {
namespace {

void check_angle_open(double value, const char* name) {
  if (!(value > 0.0 && value < 0.5 * kPi)) {
    std::ostringstream msg;
    msg << name << " must lie in (0, pi/2), got " << value;
    throw ValidationError(msg.str());
  }
}

bool certificate_holds(const IntervalPolynomial& p) {
  return certify(p).hurwitz;
}

}  // namespace

IntervalPolynomial rotate(const IntervalPolynomial& p, double theta) {
  if (!(theta > -0.5 * kPi && theta < 0.5 * kPi)) {
    std::ostringstream msg;
    msg << "rotation angle must lie in (-pi/2, pi/2), got " << theta;
    throw ValidationError(msg.str());
  }

  std::vector<ComplexIntervalBox> out;
  out.reserve(p.coeffs().size());
  for (int n = 0; n <= p.degree(); ++n) {
    const double c = std::cos(n * theta);
    const double s = std::sin(n * theta);
    const ComplexIntervalBox& box = p.coeff(n);
    const RealInterval cn = add(scale(c, box.re), scale(-s, box.im));
    const RealInterval dn = add(scale(s, box.re), scale(c, box.im));
    out.push_back({cn, dn});
  }

  // Rotation preserves |c_N + i d_N| bounds in exact arithmetic, so this
  // cannot fire; checked anyway because the interval product widens boxes.
  if (contains_zero(out.back())) {
    throw DegenerateLeadingError(
        "rotated leading coefficient box contains zero");
  }
  return IntervalPolynomial(std::move(out), theta == 0.0 && p.is_real());
}

bool test_left_sector(const IntervalPolynomial& p, double alpha) {
  check_angle_open(alpha, "alpha");
  return certificate_holds(rotate(p, alpha));
}

bool test_right_sector(const IntervalPolynomial& p, double beta) {
  check_angle_open(beta, "beta");
  return certificate_holds(rotate(p, -beta));
}

Bracket bisect(const IntervalPolynomial& p, Side side,
               const BisectOptions& options) {
  if (!(options.tol > 0.0)) {
    throw ValidationError("bisection tolerance must be positive");
  }
  const Certificate base = certify(p);
  if (!base.hurwitz) {
    std::ostringstream msg;
    msg << "family fails its Hurwitz certificate (vertex "
        << (base.failing_index ? *base.failing_index : -1)
        << "); no containing sector exists";
    throw NotCertifiedError(msg.str());
  }

  const auto predicate = [&](double theta) {
    return side == Side::Left ? test_left_sector(p, theta)
                              : test_right_sector(p, theta);
  };

  Bracket bracket;
  bracket.lo = 0.0;
  bracket.hi = 0.5 * kPi;  // false by convention, never evaluated
  while (bracket.hi - bracket.lo > options.tol) {
    const double mid = 0.5 * (bracket.lo + bracket.hi);
    if (predicate(mid)) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
    ++bracket.iterations;
  }
  // At lo > 0 the predicate itself passed; at lo == 0 only the unrotated
  // certificate vouches for the family.
  bracket.certified_at_lo = true;

  if (options.scan_check) {
    bool monotone = true;
    bool seen_false = false;
    const int points = options.scan_points;
    for (int j = 1; j <= points; ++j) {
      const double theta = bracket.hi * j / (points + 1);
      if (theta <= 0.0 || theta >= 0.5 * kPi) continue;
      const bool ok = predicate(theta);
      if (ok && seen_false) {
        monotone = false;
        break;
      }
      seen_false = seen_false || !ok;
    }
    bracket.scan_monotone = monotone;
  }
  return bracket;
}

Sector kharitonov_sector(const IntervalPolynomial& p,
                         const BisectOptions& options) {
  const Bracket left = bisect(p, Side::Left, options);
  if (p.is_real()) {
    return Sector{left.lo, left.lo};
  }
  const Bracket right = bisect(p, Side::Right, options);
  return Sector{left.lo, right.lo};
}

}  // namespace ksector
