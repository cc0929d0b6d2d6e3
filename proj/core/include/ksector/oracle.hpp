#pragma once

#include <cstdint>

#include "ksector/sector.hpp"

namespace ksector {

/// SplitMix64: the fixed, portable generator behind all sampling. One
/// instance produces the draw stream of a single sample.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Stateless output function, used to derive per-sample stream states.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Member number `index` of the stream rooted at `seed`. Stream splitting:
/// sample index i draws from SplitMix64 with initial state
/// mix(seed) XOR mix(i + 0x9E3779B97F4A7C15); each coefficient component
/// consumes exactly one draw, n ascending, real part before imaginary part,
/// uniform over its interval (zero-width components included, so the stream
/// layout never depends on which components are degenerate).
PointPolynomial member_sample(const IntervalPolynomial& p, std::uint64_t seed,
                              std::uint64_t index);

/// Extremal sector over a finite set of member polynomials, with the members
/// attaining each margin. Ties keep the lowest enumeration index.
struct SectorReport {
  Sector sector;
  PointPolynomial attaining_left;
  PointPolynomial attaining_right;
  std::uint64_t count = 0;
  std::uint64_t attaining_left_index = 0;
  std::uint64_t attaining_right_index = 0;
  /// Members that failed the Hurwitz test (sampling only; each one refutes
  /// the family's certificate).
  std::uint64_t non_hurwitz_count = 0;
};

/// Minimum sector margins over every endpoint-combination vertex.
/// Throws NotHurwitzVertexError on the first unstable vertex and
/// TooManyVerticesError past the cap.
SectorReport vertex_sector(const IntervalPolynomial& p,
                           std::uint64_t cap = kDefaultVertexCap);

/// Minimum sector margins over `count` seeded uniform member draws.
/// Deterministic for fixed (p, count, seed) regardless of `threads`
/// (0 = hardware concurrency); per-sample streams depend only on the sample
/// index.
SectorReport sample_sector(const IntervalPolynomial& p, std::uint64_t count,
                           std::uint64_t seed, int threads = 0);

/// One experiment run comparing the certified sector against both oracles.
struct ConjectureReport {
  Sector kharitonov;
  Bracket left_bracket;
  Bracket right_bracket;  // equals left_bracket for real families
  SectorReport vertex;
  SectorReport sampled;
  /// alpha_K <= alpha_V <= alpha_S (and the beta chain): the certified sector
  /// contains the vertex sector, which contains the sampled sector.
  bool chain_alpha = false;
  bool chain_beta = false;
  /// A sampled member escaped the vertex sector — a counterexample to the
  /// minimal-sector-at-vertices conjecture. Reported, never asserted.
  bool counterexample_left = false;
  bool counterexample_right = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Computes the certified, vertex, and sampled sectors and checks the
/// containment chain. Throws NotCertifiedError when p fails its certificate.
ConjectureReport conjecture_experiment(const IntervalPolynomial& p,
                                       std::uint64_t count, std::uint64_t seed,
                                       const BisectOptions& options = {},
                                       std::uint64_t cap = kDefaultVertexCap,
                                       int threads = 0);

}  // namespace ksector
