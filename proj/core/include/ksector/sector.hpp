#pragma once

#include <optional>

#include "ksector/kharitonov.hpp"

namespace ksector {

/// Which sector edge a bisection refines.
enum class Side { Left, Right };

/// Default bisection tolerance; four decimal places in units of pi.
inline constexpr double kDefaultSectorTol = 1e-4 * kPi;

/// Bisection bracket [lo, hi] in radians with the certified edge at lo:
/// the sector test holds at lo (or lo == 0, where the plain certificate
/// holds) and fails at hi.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  bool certified_at_lo = false;
  /// Set when the grid scan ran: true iff the test was monotone (no
  /// true-after-false flip) across the scanned grid.
  std::optional<bool> scan_monotone;
};

struct BisectOptions {
  double tol = kDefaultSectorTol;
  /// Re-test the predicate on a grid over [0, hi] after bisection and record
  /// whether it is monotone. The bisection itself assumes monotonicity in
  /// theta (the certificate is only sufficient, so this is unproven); the
  /// scan is the empirical check.
  bool scan_check = false;
  int scan_points = 64;
};

/// Coefficient rotation: coefficient n of the result is e^{i n theta} times
/// coefficient n of p, evaluated in interval arithmetic. Every root of every
/// member rotates by e^{-i theta}, so positive theta moves roots clockwise.
/// theta must lie in (-pi/2, pi/2). The result's real flag is set only for
/// theta == 0.
IntervalPolynomial rotate(const IntervalPolynomial& p, double theta);

/// True iff [pi/2 + alpha, 3*pi/2) contains all root angles of all members,
/// by the Kharitonov certificate of the clockwise-rotated family.
/// alpha must lie in (0, pi/2).
bool test_left_sector(const IntervalPolynomial& p, double alpha);

/// True iff (pi/2, 3*pi/2 - beta] contains all root angles of all members,
/// by the certificate of the counter-clockwise-rotated family.
bool test_right_sector(const IntervalPolynomial& p, double beta);

/// Bisects the sector test over [0, pi/2] down to `tol`. The lower end starts
/// at 0 (where the plain certificate holds) and the upper end at pi/2, which
/// is false by convention: rotating by pi/2 puts a negative real root on the
/// imaginary axis. Throws NotCertifiedError if p fails its own certificate.
Bracket bisect(const IntervalPolynomial& p, Side side,
               const BisectOptions& options = {});

/// The certified containing sector: alpha and beta are the certified lower
/// bracket ends of the left and right bisections. Real families run only the
/// left bisection and use the symmetric sector beta = alpha.
Sector kharitonov_sector(const IntervalPolynomial& p,
                         const BisectOptions& options = {});

}  // namespace ksector
