#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ksector {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (bad interval endpoints, zero leading
/// coefficient, inconsistent real flag, out-of-range angle, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A problem file is not well-formed (syntax, missing/duplicate fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The root solver did not meet its tolerance within the sweep budget.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A root sector was requested for a polynomial with a root in ℜs ≥ 0.
class NotHurwitzError : public Error {
 public:
  using Error::Error;
};

/// k4_vertices was called on a polynomial whose real flag is not set.
class NotRealError : public Error {
 public:
  using Error::Error;
};

/// Bisection was requested on a family that fails its own certificate.
class NotCertifiedError : public Error {
 public:
  using Error::Error;
};

/// Rotation produced a leading coefficient box containing zero.
class DegenerateLeadingError : public Error {
 public:
  using Error::Error;
};

/// Vertex enumeration would exceed the configured cap.
class TooManyVerticesError : public Error {
 public:
  TooManyVerticesError(const std::string& msg, std::uint64_t free_components,
                       std::uint64_t cap)
      : Error(msg), free_components(free_components), cap(cap) {}

  std::uint64_t free_components;
  std::uint64_t cap;
};

/// Exhaustive vertex scan found a vertex that is not Hurwitz. This also
/// falsifies the family's Hurwitz property, so callers normally surface it.
class NotHurwitzVertexError : public Error {
 public:
  NotHurwitzVertexError(const std::string& msg, std::uint64_t vertex_index,
                        double margin)
      : Error(msg), vertex_index(vertex_index), margin(margin) {}

  std::uint64_t vertex_index;
  double margin;
};

}  // namespace ksector
