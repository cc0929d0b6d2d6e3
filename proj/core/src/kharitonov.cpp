#include "ksector/kharitonov.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>

namespace ksector {
namespace {

enum class End : unsigned char { L, U };

struct EndPair {
  End re;
  End im;
};

// Endpoint-selection patterns, frozen as data and locked by golden tests
// against the known vertex listings for the degree-3 complex family. Row m is
// the pattern of K_{m+1}; column n % 4 selects the (re, im) endpoints of
// coefficient n.
constexpr EndPair kK8Pattern[8][4] = {
    {{End::U, End::U}, {End::U, End::L}, {End::L, End::L}, {End::L, End::U}},
    {{End::U, End::L}, {End::L, End::L}, {End::L, End::U}, {End::U, End::U}},
    {{End::L, End::U}, {End::U, End::U}, {End::U, End::L}, {End::L, End::L}},
    {{End::L, End::L}, {End::L, End::U}, {End::U, End::U}, {End::U, End::L}},
    {{End::U, End::U}, {End::L, End::U}, {End::L, End::L}, {End::U, End::L}},
    {{End::U, End::L}, {End::U, End::U}, {End::L, End::U}, {End::L, End::L}},
    {{End::L, End::U}, {End::L, End::L}, {End::U, End::L}, {End::U, End::U}},
    {{End::L, End::L}, {End::U, End::L}, {End::U, End::U}, {End::L, End::U}},
};

constexpr End kK4Pattern[4][4] = {
    {End::L, End::L, End::U, End::U},
    {End::L, End::U, End::U, End::L},
    {End::U, End::U, End::L, End::L},
    {End::U, End::L, End::L, End::U},
};

double pick(const RealInterval& iv, End which) {
  return which == End::L ? iv.lo : iv.hi;
}

}  // namespace

IntervalPolynomial::IntervalPolynomial(std::vector<ComplexIntervalBox> coeffs,
                                       bool is_real)
    : coeffs_(std::move(coeffs)), is_real_(is_real) {
  if (coeffs_.size() < 2) {
    throw ValidationError("interval polynomial degree must be at least 1");
  }
  if (contains_zero(coeffs_.back())) {
    throw ValidationError(
        "leading coefficient box must exclude zero: a member with vanishing "
        "leading coefficient drops the degree and sends a root through "
        "infinity, so no containing sector exists");
  }
  if (is_real_) {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      const RealInterval& im = coeffs_[n].im;
      if (!(im.lo == 0.0 && im.hi == 0.0)) {
        throw ValidationError(
            "real flag set but imaginary interval of coefficient " +
            std::to_string(n) + " is not [0, 0]");
      }
    }
  }
}

IntervalPolynomial IntervalPolynomial::from_real(
    const std::vector<RealInterval>& a) {
  std::vector<ComplexIntervalBox> boxes;
  boxes.reserve(a.size());
  for (const RealInterval& iv : a) {
    boxes.push_back({iv, RealInterval::point(0.0)});
  }
  return IntervalPolynomial(std::move(boxes), true);
}

IntervalPolynomial IntervalPolynomial::degenerate(const PointPolynomial& p) {
  std::vector<ComplexIntervalBox> boxes;
  boxes.reserve(p.coeffs.size());
  bool real = true;
  for (const Complex& c : p.coeffs) {
    boxes.push_back(
        {RealInterval::point(c.real()), RealInterval::point(c.imag())});
    real = real && c.imag() == 0.0;
  }
  return IntervalPolynomial(std::move(boxes), real);
}

PointPolynomial IntervalPolynomial::midpoint() const {
  std::vector<Complex> c;
  c.reserve(coeffs_.size());
  for (const ComplexIntervalBox& box : coeffs_) {
    c.emplace_back(box.re.midpoint(), box.im.midpoint());
  }
  return PointPolynomial(std::move(c));
}

bool IntervalPolynomial::contains(const PointPolynomial& p,
                                  double slack) const {
  if (p.coeffs.size() != coeffs_.size()) {
    return false;
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const ComplexIntervalBox& box = coeffs_[n];
    const Complex& c = p.coeffs[n];
    if (c.real() < box.re.lo - slack || c.real() > box.re.hi + slack ||
        c.imag() < box.im.lo - slack || c.imag() > box.im.hi + slack) {
      return false;
    }
  }
  return true;
}

std::vector<PointPolynomial> k8_vertices(const IntervalPolynomial& p) {
  std::vector<PointPolynomial> out;
  out.reserve(8);
  for (int m = 0; m < 8; ++m) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (int n = 0; n <= p.degree(); ++n) {
      const EndPair& sel = kK8Pattern[m][n % 4];
      const ComplexIntervalBox& box = p.coeff(n);
      c.emplace_back(pick(box.re, sel.re), pick(box.im, sel.im));
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<PointPolynomial> k4_vertices(const IntervalPolynomial& p) {
  if (!p.is_real()) {
    throw NotRealError(
        "the 4-vertex construction applies only to real families; use the "
        "8-vertex construction for complex ones");
  }
  std::vector<PointPolynomial> out;
  out.reserve(4);
  for (int m = 0; m < 4; ++m) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (int n = 0; n <= p.degree(); ++n) {
      c.emplace_back(pick(p.coeff(n).re, kK4Pattern[m][n % 4]), 0.0);
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

Certificate certify(const IntervalPolynomial& p) {
  const std::vector<PointPolynomial> vertices =
      p.is_real() ? k4_vertices(p) : k8_vertices(p);

  Certificate cert;
  cert.family_size = static_cast<int>(vertices.size());
  cert.hurwitz = true;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double margin = hurwitz_margin(vertices[i]);
    cert.margins.push_back(margin);
    if (!is_hurwitz_margin(margin)) {
      cert.hurwitz = false;
      cert.failing_index = static_cast<int>(i);
      break;
    }
  }
  return cert;
}

VertexEnumerator::VertexEnumerator(const IntervalPolynomial& p,
                                   std::uint64_t cap)
    : poly_(&p), count_(1) {
  for (int n = 0; n <= p.degree(); ++n) {
    if (!p.coeff(n).re.is_point()) {
      free_.push_back({n, false});
    }
    if (!p.coeff(n).im.is_point()) {
      free_.push_back({n, true});
    }
  }
  if (free_.size() >= 63) {
    throw TooManyVerticesError("vertex count 2^" + std::to_string(free_.size()) +
                                   " exceeds any representable cap",
                               free_.size(), cap);
  }
  count_ = std::uint64_t{1} << free_.size();
  if (count_ > cap) {
    std::ostringstream msg;
    msg << "vertex count " << count_ << " exceeds cap " << cap
        << "; raise the cap to enumerate anyway";
    throw TooManyVerticesError(msg.str(), free_.size(), cap);
  }
}

PointPolynomial VertexEnumerator::vertex(std::uint64_t index) const {
  std::vector<Complex> c;
  c.reserve(poly_->coeffs().size());
  for (const ComplexIntervalBox& box : poly_->coeffs()) {
    c.emplace_back(box.re.lo, box.im.lo);
  }
  // Component 0 is the most significant bit, so index order is lexicographic
  // with L (bit 0) before U (bit 1).
  const std::size_t m = free_.size();
  for (std::size_t j = 0; j < m; ++j) {
    const bool upper = (index >> (m - 1 - j)) & 1u;
    if (!upper) continue;
    const FreeComponent& fc = free_[j];
    const ComplexIntervalBox& box = poly_->coeff(fc.n);
    Complex& target = c[static_cast<std::size_t>(fc.n)];
    if (fc.imaginary) {
      target = Complex(target.real(), box.im.hi);
    } else {
      target = Complex(box.re.hi, target.imag());
    }
  }
  return PointPolynomial(std::move(c));
}

std::vector<PointPolynomial> enumerate_all_vertices(const IntervalPolynomial& p,
                                                    std::uint64_t cap) {
  const VertexEnumerator en(p, cap);
  std::vector<PointPolynomial> out;
  out.reserve(en.count());
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    out.push_back(en.vertex(i));
  }
  return out;
}

}  // namespace ksector
