#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksector/polyroot.hpp"
#include "matchers.hpp"

using namespace ksector;
using ksector::testing::max_match_distance;
using ksector::testing::random_roots;

namespace {

// Hand expansion of (s+1-0.1i)(s+1.5-0.2i)(s+2+0.25i):
//   (s+1-0.1i)(s+1.5-0.2i) = s^2 + (2.5-0.3i)s + (1.48-0.35i)
//   times (s+2+0.25i): constant (2+0.25i)(1.48-0.35i) = 3.0475-0.33i,
//   s term (1.48-0.35i)+(2+0.25i)(2.5-0.3i) = 6.555-0.325i,
//   s^2 term (2.5-0.3i)+(2+0.25i) = 4.5-0.05i.
const std::vector<Complex> kMidpointCubic{{3.0475, -0.33},
                                          {6.555, -0.325},
                                          {4.5, -0.05},
                                          {1.0, 0.0}};
const std::vector<Complex> kMidpointRoots{{-1.0, 0.1},
                                          {-1.5, 0.2},
                                          {-2.0, -0.25}};

// (s+1)(s^2+3s+4.81): the conjugate pair -1.5 +/- 1.6i contributes
// s^2 + 3s + (2.25+2.56).
const std::vector<Complex> kRealCubic{{4.81, 0.0},
                                      {7.81, 0.0},
                                      {4.0, 0.0},
                                      {1.0, 0.0}};

}  // namespace

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(PointPolynomial(std::vector<Complex>{{1.0, 0.0}}),
                  ValidationError);
  CHECK_THROWS_AS(PointPolynomial(std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}}),
                  ValidationError);
}

TEST_CASE("linear root is exact") {
  const RootSet rs = roots(PointPolynomial({{1.0, 0.0}, {1.0, 0.0}}));
  REQUIRE(rs.roots.size() == 1);
  CHECK(rs.roots[0] == Complex(-1.0, 0.0));
}

TEST_CASE("cubic with known complex roots") {
  const RootSet rs = roots(PointPolynomial(kMidpointCubic));
  CHECK(max_match_distance(rs.roots, kMidpointRoots) < 1e-10);
  CHECK(rs.residual < 1e-10);
}

TEST_CASE("real cubic with conjugate pair") {
  const RootSet rs = roots(PointPolynomial(kRealCubic));
  CHECK(max_match_distance(rs.roots, {{-1.0, 0.0}, {-1.5, 1.6}, {-1.5, -1.6}}) <
        1e-10);
}

TEST_CASE("hurwitz margin is the largest root real part") {
  CHECK(hurwitz_margin(PointPolynomial({{1, 0}, {1, 0}})) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(hurwitz_margin(PointPolynomial({{-1, 0}, {1, 0}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("poly_from_roots expands monomial coefficients") {
  const std::vector<Complex> single{-1.0};
  const PointPolynomial linear = poly_from_roots(single, Complex(1.0, 0.0));
  CHECK(linear.coeffs == std::vector<Complex>{{1.0, 0.0}, {1.0, 0.0}});

  const PointPolynomial cubic = poly_from_roots(kMidpointRoots, {1.0, 0.0});
  REQUIRE(cubic.coeffs.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(cubic.coeffs[k] - kMidpointCubic[k]) < 1e-14);
  }

  const std::vector<Complex> real_roots{{-1.5, 1.6}, {-1.5, -1.6}, {-1.0, 0.0}};
  const PointPolynomial real_cubic = poly_from_roots(real_roots, {1.0, 0.0});
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(real_cubic.coeffs[k] - kRealCubic[k]) < 1e-14);
  }

  CHECK_THROWS_AS(poly_from_roots(single, Complex(0.0, 0.0)), ValidationError);
}

TEST_CASE("root_sector margins") {
  const Sector line = root_sector(PointPolynomial({{1, 0}, {1, 0}}));
  CHECK(line.alpha == doctest::Approx(0.5 * kPi).epsilon(1e-12));
  CHECK(line.beta == doctest::Approx(0.5 * kPi).epsilon(1e-12));

  // lone root at angle 3*pi/4
  const std::vector<Complex> upper{{-1.0, 1.0}};
  const Sector tilted = root_sector(poly_from_roots(upper, {1.0, 0.0}));
  CHECK(tilted.alpha == doctest::Approx(0.25 * kPi).epsilon(1e-12));
  CHECK(tilted.beta == doctest::Approx(0.75 * kPi).epsilon(1e-12));

  // Cross-validated against an independent companion-matrix solver: the
  // vertex with constant coefficient 4.91 is the one whose sector is
  // [126.7268, 233.2732] degrees; lowering the constant to 4.71 narrows it.
  const Sector vertex = root_sector(
      PointPolynomial({{4.91, 0}, {7.91, 0}, {3.9, 0}, {1.1, 0}}));
  CHECK(std::abs(rad_to_deg(vertex.left_edge()) - 126.7268) < 1e-3);
  CHECK(std::abs(rad_to_deg(vertex.right_edge()) - 233.2732) < 1e-3);
  const Sector narrower = root_sector(
      PointPolynomial({{4.71, 0}, {7.91, 0}, {3.9, 0}, {1.1, 0}}));
  CHECK(std::abs(rad_to_deg(narrower.left_edge()) - 127.2156) < 1e-3);
  CHECK(std::abs(rad_to_deg(narrower.right_edge()) - 232.7844) < 1e-3);

  CHECK_THROWS_AS(root_sector(PointPolynomial({{-1, 0}, {1, 0}})),
                  NotHurwitzError);
}

TEST_CASE("round trip through poly_from_roots") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> degree_dist(1, 8);
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = degree_dist(rng);
    const auto expected = random_roots(rng, degree, 10.0, 1e-2);
    const Complex leading = std::polar(1.0, phase(rng));
    const PointPolynomial p = poly_from_roots(expected, leading);

    const RootSet rs = roots(p);
    CHECK(max_match_distance(rs.roots, expected) < 1e-8);

    double max_re = -1e300;
    for (const Complex& r : expected) max_re = std::max(max_re, r.real());
    CHECK(hurwitz_margin(p) == doctest::Approx(max_re).epsilon(1e-8));
  }
}

TEST_CASE("real coefficients give a conjugation-closed root set") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(-4.0, -0.5);
  std::uniform_real_distribution<double> im(0.5, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    // two conjugate pairs plus one real root, expanded over the reals
    const Complex a(re(rng), im(rng));
    const Complex b(re(rng), im(rng));
    const std::vector<Complex> rts{a, std::conj(a), b, std::conj(b),
                                   {re(rng), 0.0}};
    PointPolynomial p = poly_from_roots(rts, {1.0, 0.0});
    for (Complex& c : p.coeffs) c = Complex(c.real(), 0.0);  // drop fp dust

    const RootSet rs = roots(p);
    std::vector<Complex> conjugated;
    conjugated.reserve(rs.roots.size());
    for (const Complex& r : rs.roots) conjugated.push_back(std::conj(r));
    CHECK(max_match_distance(rs.roots, conjugated) < 1e-8);

    const Sector s = sector_of_roots(rs.roots);
    CHECK(s.alpha == doctest::Approx(s.beta).epsilon(1e-8));
  }
}
