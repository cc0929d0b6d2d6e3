#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ksector/angles.hpp"
#include "ksector/errors.hpp"

namespace ksector {

using Complex = std::complex<double>;

/// Polynomial with exact complex coefficients c_0 + c_1 s + ... + c_N s^N,
/// stored in ascending order. Degree N >= 1 and c_N != 0.
struct PointPolynomial {
  std::vector<Complex> coeffs;

  explicit PointPolynomial(std::vector<Complex> c);

  [[nodiscard]] int degree() const {
    return static_cast<int>(coeffs.size()) - 1;
  }
  [[nodiscard]] Complex leading() const { return coeffs.back(); }
  [[nodiscard]] Complex eval(Complex s) const;

  friend bool operator==(const PointPolynomial&,
                         const PointPolynomial&) = default;
};

/// All roots of a polynomial, with multiplicity. `residual` is
/// max_k |P(root_k)| / |c_N|, a post-hoc quality measure.
struct RootSet {
  std::vector<Complex> roots;
  double residual = 0.0;
};

/// Roots below this margin (in absolute value) are treated as lying on the
/// imaginary axis; such polynomials are classified not Hurwitz.
inline constexpr double kHurwitzBoundaryTol = 1e-10;

/// Strict open-left-half-plane test on a computed margin.
inline bool is_hurwitz_margin(double margin) {
  return margin < -kHurwitzBoundaryTol;
}

/// Computes all roots by Aberth–Ehrlich simultaneous iteration.
///
/// Initial guesses are equally spaced on a circle of radius
/// 1 + max_n |c_n / c_N|, rotated by a fixed irrational phase so that they
/// never align with the symmetry axes of conjugate-symmetric root sets.
/// Converged when every per-root update satisfies |dz| < 1e-13 * (1 + |z|),
/// with a budget of 500 sweeps.
///
/// Throws NonConvergenceError if the budget is exhausted.
RootSet roots(const PointPolynomial& p);

/// Maximum real part over the roots of p. Negative iff p is Hurwitz.
double hurwitz_margin(const PointPolynomial& p);

/// Expands leading * prod_k (s - r_k) into monomial coefficients.
PointPolynomial poly_from_roots(std::span<const Complex> roots,
                                Complex leading);

/// Sector margins of a root multiset that lies strictly in the open left
/// half-plane: alpha = min(angle - pi/2), beta = min(3*pi/2 - angle).
/// Throws NotHurwitzError if any root has nonnegative real part.
Sector sector_of_roots(std::span<const Complex> roots);

/// sector_of_roots(roots(p).roots).
Sector root_sector(const PointPolynomial& p);

}  // namespace ksector
