#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ksector/polyroot.hpp"

namespace ksector::testing {

/// Greedy nearest-neighbor multiset match; returns the largest pair distance
/// (infinity when the sizes differ).
inline double max_match_distance(std::vector<Complex> actual,
                                 std::vector<Complex> expected) {
  if (actual.size() != expected.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (const Complex& a : actual) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < expected.size(); ++j) {
      const double d = std::abs(a - expected[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    worst = std::max(worst, best_dist);
    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

/// Random root set with every pairwise separation at least `min_sep`.
inline std::vector<Complex> random_roots(std::mt19937_64& rng, int count,
                                         double max_abs, double min_sep) {
  std::uniform_real_distribution<double> coord(-max_abs, max_abs);
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < count) {
    const Complex candidate(coord(rng), coord(rng));
    bool ok = std::abs(candidate) <= max_abs;
    for (const Complex& r : roots) {
      ok = ok && std::abs(candidate - r) >= min_sep;
    }
    if (ok) roots.push_back(candidate);
  }
  return roots;
}

}  // namespace ksector::testing
