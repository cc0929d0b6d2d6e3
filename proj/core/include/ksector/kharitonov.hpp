#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ksector/interval.hpp"
#include "ksector/polyroot.hpp"

namespace ksector {

/// Hard ceiling on exhaustive vertex enumeration unless overridden.
inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 24;

/// Family of polynomials sum_n [a_n + i b_n] s^n whose coefficient n ranges
/// over a rectangle in the complex plane. The real flag is set explicitly at
/// construction (parse time), never inferred later from endpoint comparisons.
class IntervalPolynomial {
 public:
  /// Validates: degree >= 1, leading box excludes zero, and — when is_real —
  /// every imaginary interval is exactly [0, 0].
  IntervalPolynomial(std::vector<ComplexIntervalBox> coeffs, bool is_real);

  /// Real family from real coefficient intervals (imaginary parts [0,0]).
  static IntervalPolynomial from_real(const std::vector<RealInterval>& a);

  /// Zero-width family holding exactly one member.
  static IntervalPolynomial degenerate(const PointPolynomial& p);

  [[nodiscard]] int degree() const {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_real() const { return is_real_; }
  [[nodiscard]] const std::vector<ComplexIntervalBox>& coeffs() const {
    return coeffs_;
  }
  [[nodiscard]] const ComplexIntervalBox& coeff(int n) const {
    return coeffs_[static_cast<std::size_t>(n)];
  }

  /// Member with every coefficient at its box midpoint.
  [[nodiscard]] PointPolynomial midpoint() const;

  /// True iff every coefficient of p lies in the corresponding box, with an
  /// absolute slack on each endpoint.
  [[nodiscard]] bool contains(const PointPolynomial& p,
                              double slack = 0.0) const;

  friend bool operator==(const IntervalPolynomial&,
                         const IntervalPolynomial&) = default;

 private:
  std::vector<ComplexIntervalBox> coeffs_;
  bool is_real_;
};

/// Outcome of the Kharitonov vertex test. `margins` holds the Hurwitz margin
/// of each vertex evaluated, in index order; evaluation short-circuits at the
/// first failure, recorded in `failing_index`.
struct Certificate {
  bool hurwitz = false;
  std::vector<double> margins;
  std::optional<int> failing_index;
  int family_size = 0;  // 4 for real families, 8 for complex ones
};

/// The eight Kharitonov vertex polynomials K_1..K_8 of a complex family.
/// Each coefficient picks interval endpoints by a fixed period-4 pattern.
std::vector<PointPolynomial> k8_vertices(const IntervalPolynomial& p);

/// The four Kharitonov vertex polynomials of a real family.
/// Throws NotRealError when the real flag is not set.
std::vector<PointPolynomial> k4_vertices(const IntervalPolynomial& p);

/// Hurwitz certificate: every Kharitonov vertex (4 real / 8 complex) Hurwitz
/// implies the whole family is Hurwitz.
Certificate certify(const IntervalPolynomial& p);

/// Random access into the 2^m endpoint-combination vertices of a family,
/// where m counts interval components of positive width. Enumeration order is
/// lexicographic: n ascending, real endpoint before imaginary endpoint, lower
/// endpoint before upper (index 0 is the all-lower vertex).
class VertexEnumerator {
 public:
  explicit VertexEnumerator(const IntervalPolynomial& p,
                            std::uint64_t cap = kDefaultVertexCap);

  [[nodiscard]] std::uint64_t count() const { return count_; }
  [[nodiscard]] PointPolynomial vertex(std::uint64_t index) const;

 private:
  struct FreeComponent {
    int n;
    bool imaginary;
  };

  const IntervalPolynomial* poly_;
  std::vector<FreeComponent> free_;
  std::uint64_t count_;
};

/// Materializes every endpoint-combination vertex in enumeration order.
/// Throws TooManyVerticesError when the count exceeds the cap.
std::vector<PointPolynomial> enumerate_all_vertices(
    const IntervalPolynomial& p, std::uint64_t cap = kDefaultVertexCap);

}  // namespace ksector
