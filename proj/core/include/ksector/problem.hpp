#pragma once

#include <iosfwd>
#include <string>

#include "ksector/kharitonov.hpp"

namespace ksector {

/// A parsed problem file: an interval polynomial plus its metadata.
struct Problem {
  IntervalPolynomial poly;
  std::string name;
  std::string notes;
};

/// Reads a problem from a JSON file. Schema: top-level `degree` (integer),
/// `coefficients` (array of {n, re: [lo,hi], im: [lo,hi] optional, default
/// [0,0]}), optional `name` and `notes`. The real flag is inferred at parse
/// time: set iff every `im` entry is absent or exactly [0, 0].
///
/// Throws ParseError for malformed input and ValidationError for violated
/// invariants (missing indices, leading box containing zero, ...).
Problem parse_problem(const std::string& path);

/// Same, from an already-read document (used by tests and stdin input).
Problem parse_problem_text(const std::string& text,
                           const std::string& origin = "<input>");

}  // namespace ksector
