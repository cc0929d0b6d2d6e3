#include "ksector/polyroot.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

namespace ksector {
namespace {

constexpr int kMaxSweeps = 500;
constexpr double kStepTol = 1e-13;

// Irrational phase offset (the golden angle, pi*(3 - sqrt 5)) applied to the
// ring of initial guesses. Keeps them off the real axis and off any root
// symmetry axis, so the coupled iteration cannot lock into a symmetric
// stationary configuration.
constexpr double kSpreadPhase = 2.399963229728653;

// Evaluates p and p' at z by a fused Horner pass. `monic_low` holds the
// coefficients below the (implicit, unit) leading one, so the degree is
// monic_low.size().
void eval_with_derivative(std::span<const Complex> monic_low, Complex z,
                          Complex& value, Complex& derivative) {
  Complex v = 1.0;
  Complex d = 0.0;
  for (std::size_t k = monic_low.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + monic_low[k];
  }
  value = v;
  derivative = d;
}

}  // namespace

PointPolynomial::PointPolynomial(std::vector<Complex> c) : coeffs(std::move(c)) {
  if (coeffs.size() < 2) {
    throw ValidationError("polynomial degree must be at least 1");
  }
  if (std::abs(coeffs.back()) == 0.0) {
    throw ValidationError("leading coefficient must be nonzero");
  }
}

Complex PointPolynomial::eval(Complex s) const {
  Complex v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    v = v * s + coeffs[k];
  }
  return v;
}

RootSet roots(const PointPolynomial& p) {
  const int n = p.degree();
  const Complex lead = p.leading();

  // Work on the monic polynomial; roots are unchanged and the residual
  // |p(z)|/|c_N| falls out directly.
  std::vector<Complex> monic(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    monic[static_cast<std::size_t>(k)] = p.coeffs[static_cast<std::size_t>(k)] / lead;
  }

  RootSet result;
  if (n == 1) {
    result.roots.push_back(-monic[0]);
    result.residual = std::abs(p.eval(result.roots[0])) / std::abs(lead);
    return result;
  }

  double max_mod = 1.0;  // includes the monic leading coefficient itself
  for (const Complex& c : monic) {
    max_mod = std::max(max_mod, std::abs(c));
  }
  const double radius = 1.0 + max_mod;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * kPi * k / n + kSpreadPhase;
    z[static_cast<std::size_t>(k)] = std::polar(radius, phi);
  }

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      Complex& zk = z[static_cast<std::size_t>(k)];
      Complex value, derivative;
      eval_with_derivative(monic, zk, value, derivative);
      if (std::abs(value) == 0.0) {
        continue;  // exactly on a root
      }

      Complex coupling = 0.0;
      bool collided = false;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = zk - z[static_cast<std::size_t>(j)];
        if (std::abs(diff) == 0.0) {
          collided = true;
          break;
        }
        coupling += 1.0 / diff;
      }
      if (collided || std::abs(derivative) == 0.0) {
        // Break the tie deterministically and retry on the next sweep.
        zk += std::polar(1e-8 * (1.0 + std::abs(zk)),
                         kSpreadPhase * (k + 1));
        converged = false;
        continue;
      }

      const Complex newton = value / derivative;
      const Complex denom = 1.0 - newton * coupling;
      // Fall back to a plain Newton step when the Aberth correction blows up.
      const Complex step = std::abs(denom) == 0.0 ? newton : newton / denom;
      zk -= step;
      if (std::abs(step) >= kStepTol * (1.0 + std::abs(zk))) {
        converged = false;
      }
    }
  }

  if (!converged) {
    std::ostringstream msg;
    msg << "root iteration did not converge within " << kMaxSweeps
        << " sweeps (degree " << n << ")";
    throw NonConvergenceError(msg.str());
  }

  double residual = 0.0;
  for (const Complex& zk : z) {
    Complex value, derivative;
    eval_with_derivative(monic, zk, value, derivative);
    residual = std::max(residual, std::abs(value));
  }

  result.roots = std::move(z);
  result.residual = residual;
  return result;
}

double hurwitz_margin(const PointPolynomial& p) {
  const RootSet rs = roots(p);
  double margin = -std::numeric_limits<double>::infinity();
  for (const Complex& z : rs.roots) {
    margin = std::max(margin, z.real());
  }
  return margin;
}

PointPolynomial poly_from_roots(std::span<const Complex> roots,
                                Complex leading) {
  if (std::abs(leading) == 0.0) {
    throw ValidationError("leading coefficient must be nonzero");
  }
  std::vector<Complex> coeffs{leading};
  for (const Complex& r : roots) {
    // Multiply by (s - r): shift up one power, subtract r times the old row.
    coeffs.push_back(coeffs.back());
    for (std::size_t k = coeffs.size() - 2; k > 0; --k) {
      coeffs[k] = coeffs[k - 1] - r * coeffs[k];
    }
    coeffs[0] = -r * coeffs[0];
  }
  return PointPolynomial(std::move(coeffs));
}

Sector sector_of_roots(std::span<const Complex> roots) {
  Sector sector{std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
  for (const Complex& z : roots) {
    if (z.real() >= 0.0) {
      std::ostringstream msg;
      msg << "root " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
          << "i has nonnegative real part; the sector representation is "
             "undefined outside the open left half-plane";
      throw NotHurwitzError(msg.str());
    }
    const double ang = angle_0_2pi(z);
    sector.alpha = std::min(sector.alpha, ang - 0.5 * kPi);
    sector.beta = std::min(sector.beta, 1.5 * kPi - ang);
  }
  return sector;
}

Sector root_sector(const PointPolynomial& p) {
  return sector_of_roots(roots(p).roots);
}

}  // namespace ksector
