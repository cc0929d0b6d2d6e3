#pragma once

#include <complex>
#include <numbers>

namespace ksector {

inline constexpr double kPi = std::numbers::pi;

/// Principal argument of z mapped into [0, 2*pi).
inline double angle_0_2pi(std::complex<double> z) {
  double a = std::arg(z);
  if (a < 0.0) {
    a += 2.0 * kPi;
  }
  return a;
}

/// Angular margins (alpha, beta) encoding the root sector
/// [pi/2 + alpha, 3*pi/2 - beta]. For stable (left half-plane) root sets both
/// margins are positive; a lone root can push a margin up to pi.
struct Sector {
  double alpha = 0.0;
  double beta = 0.0;

  /// Sector edges in radians, measured as angles in [0, 2*pi).
  [[nodiscard]] double left_edge() const { return 0.5 * kPi + alpha; }
  [[nodiscard]] double right_edge() const { return 1.5 * kPi - beta; }

  friend bool operator==(const Sector&, const Sector&) = default;
};

inline double rad_to_deg(double rad) { return rad / kPi * 180.0; }
inline double deg_to_rad(double deg) { return deg / 180.0 * kPi; }
inline double rad_to_pi_fraction(double rad) { return rad / kPi; }

}  // namespace ksector
