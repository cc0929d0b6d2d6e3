#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksector/interval.hpp"

using namespace ksector;

TEST_CASE("scale follows the sign of the scalar") {
  CHECK(scale(2.0, {1.0, 3.0}) == RealInterval(2.0, 6.0));
  CHECK(scale(-1.0, {1.0, 2.0}) == RealInterval(-2.0, -1.0));
  CHECK(scale(0.0, {-5.0, 7.0}) == RealInterval(0.0, 0.0));
}

TEST_CASE("add sums endpoints") {
  CHECK(add({1.0, 2.0}, {3.0, 4.0}) == RealInterval(4.0, 6.0));
  CHECK(add({-1.0, 1.0}, {0.0, 0.0}) == RealInterval(-1.0, 1.0));
  CHECK(add({0.0, 1.0}, {-1.0, 0.0}) == RealInterval(-1.0, 1.0));
}

TEST_CASE("contains_zero needs both components to straddle the origin") {
  CHECK(contains_zero({{-1.0, 1.0}, {-1.0, 1.0}}));
  CHECK_FALSE(contains_zero({{0.9, 1.1}, {-0.1, 0.1}}));
  CHECK(contains_zero({{0.0, 0.0}, {0.0, 0.0}}));
}

TEST_CASE("invalid endpoints are rejected") {
  CHECK_THROWS_AS(RealInterval(2.0, 1.0), ValidationError);
  CHECK_THROWS_AS(RealInterval(0.0, std::numeric_limits<double>::infinity()),
                  ValidationError);
  CHECK_THROWS_AS(RealInterval(std::numeric_limits<double>::quiet_NaN(), 0.0),
                  ValidationError);
}

TEST_CASE("containment soundness under random sampling") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scalar(-10.0, 10.0);
  std::uniform_real_distribution<double> endpoint(-20.0, 20.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = endpoint(rng);
    const double b = endpoint(rng);
    const RealInterval iv(std::min(a, b), std::max(a, b));
    const double x = scalar(rng);
    const double y = iv.lo + unit(rng) * iv.width();
    const RealInterval scaled = scale(x, iv);
    CHECK(scaled.lo <= x * y);
    CHECK(x * y <= scaled.hi);
  }
}

TEST_CASE("scale by unit scalars is an exact involution") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> endpoint(-1e6, 1e6);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = endpoint(rng);
    const double b = endpoint(rng);
    const RealInterval iv(std::min(a, b), std::max(a, b));
    CHECK(scale(1.0, iv) == iv);
    CHECK(scale(-1.0, scale(-1.0, iv)) == iv);
  }
}

TEST_CASE("add is commutative and associative on exact values") {
  const RealInterval u(1.0, 2.5);
  const RealInterval v(-3.0, 0.5);
  const RealInterval w(0.25, 4.0);
  CHECK(add(u, v) == add(v, u));
  CHECK(add(add(u, v), w) == add(u, add(v, w)));
}
