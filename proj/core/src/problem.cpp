#include "ksector/problem.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace ksector {
namespace {

using nlohmann::json;

RealInterval parse_interval(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    throw ParseError(where + " must be a two-number array [lo, hi]");
  }
  try {
    return RealInterval(value[0].get<double>(), value[1].get<double>());
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

}  // namespace

Problem parse_problem_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(origin + ": top level must be an object");
  }
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) {
    throw ParseError(origin + ": missing integer field 'degree'");
  }
  const int degree = doc["degree"].get<int>();
  if (degree < 1) {
    throw ValidationError(origin + ": degree must be at least 1");
  }
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw ParseError(origin + ": missing array field 'coefficients'");
  }
  const json& entries = doc["coefficients"];
  if (entries.size() != static_cast<std::size_t>(degree) + 1) {
    std::ostringstream msg;
    msg << origin << ": expected " << degree + 1 << " coefficient records for "
        << "degree " << degree << ", got " << entries.size();
    throw ValidationError(msg.str());
  }

  std::vector<ComplexIntervalBox> boxes(static_cast<std::size_t>(degree) + 1);
  std::vector<bool> seen(boxes.size(), false);
  bool all_imag_zero = true;
  for (const json& entry : entries) {
    if (!entry.is_object() || !entry.contains("n") ||
        !entry["n"].is_number_integer()) {
      throw ParseError(origin + ": each coefficient needs an integer index 'n'");
    }
    const int n = entry["n"].get<int>();
    if (n < 0 || n > degree) {
      std::ostringstream msg;
      msg << origin << ": coefficient index " << n << " outside 0.." << degree;
      throw ValidationError(msg.str());
    }
    if (seen[static_cast<std::size_t>(n)]) {
      std::ostringstream msg;
      msg << origin << ": coefficient index " << n << " appears twice";
      throw ValidationError(msg.str());
    }
    seen[static_cast<std::size_t>(n)] = true;

    std::ostringstream where;
    where << origin << ": coefficient " << n;
    if (!entry.contains("re")) {
      throw ParseError(where.str() + " is missing 're'");
    }
    const RealInterval re = parse_interval(entry["re"], where.str() + " 're'");
    RealInterval im = RealInterval::point(0.0);
    if (entry.contains("im")) {
      im = parse_interval(entry["im"], where.str() + " 'im'");
    }
    all_imag_zero = all_imag_zero && im.lo == 0.0 && im.hi == 0.0;
    boxes[static_cast<std::size_t>(n)] = ComplexIntervalBox{re, im};
  }
  // All indices present follows from the count check plus uniqueness, but a
  // direct message beats an off-by-one surprise.
  for (std::size_t n = 0; n < seen.size(); ++n) {
    if (!seen[n]) {
      throw ValidationError(origin + ": coefficient index " +
                            std::to_string(n) + " is missing");
    }
  }

  Problem problem{IntervalPolynomial(std::move(boxes), all_imag_zero), "", ""};
  if (doc.contains("name") && doc["name"].is_string()) {
    problem.name = doc["name"].get<std::string>();
  }
  if (doc.contains("notes") && doc["notes"].is_string()) {
    problem.notes = doc["notes"].get<std::string>();
  }
  return problem;
}

Problem parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open problem file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str(), path);
}

}  // namespace ksector
