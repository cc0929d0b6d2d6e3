#include "ksector/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ksector {
namespace {

using nlohmann::json;

std::string printf_str(const char* fmt, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

std::string angle_display(double radians) {
  const double frac = rad_to_pi_fraction(radians);
  std::ostringstream out;
  out << printf_str("%.6f", frac) << " pi (" << printf_str("%.4f", frac * 180.0)
      << " deg)";
  return out.str();
}

// Degrees are derived from the pi fraction so the two renderings stay
// consistent to the last bit.
json angle_json(double radians) {
  const double frac = rad_to_pi_fraction(radians);
  return json{{"radians", radians},
              {"pi_fraction", frac},
              {"degrees", frac * 180.0},
              {"display", angle_display(radians)}};
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json polynomial_json(const PointPolynomial& p) {
  json coeffs = json::array();
  for (const Complex& c : p.coeffs) {
    coeffs.push_back(complex_json(c));
  }
  return coeffs;
}

json problem_json(const Problem& problem) {
  json coeffs = json::array();
  for (int n = 0; n <= problem.poly.degree(); ++n) {
    const ComplexIntervalBox& box = problem.poly.coeff(n);
    coeffs.push_back(json{{"n", n},
                          {"re", json::array({box.re.lo, box.re.hi})},
                          {"im", json::array({box.im.lo, box.im.hi})}});
  }
  return json{{"name", problem.name},
              {"degree", problem.poly.degree()},
              {"is_real", problem.poly.is_real()},
              {"coefficients", coeffs}};
}

json bracket_json(const Bracket& b) {
  json out{{"lo", angle_json(b.lo)},
           {"hi", angle_json(b.hi)},
           {"width", angle_json(b.hi - b.lo)},
           {"iterations", b.iterations},
           {"certified_at_lo", b.certified_at_lo}};
  out["scan_monotone"] =
      b.scan_monotone.has_value() ? json(*b.scan_monotone) : json(nullptr);
  return out;
}

std::string sector_display(const Sector& s) {
  std::ostringstream out;
  out << "[" << printf_str("%.4f", rad_to_deg(s.left_edge())) << " deg, "
      << printf_str("%.4f", rad_to_deg(s.right_edge())) << " deg]";
  return out.str();
}

json sector_json(const Sector& s) {
  return json{{"alpha", angle_json(s.alpha)},
              {"beta", angle_json(s.beta)},
              {"left_edge", angle_json(s.left_edge())},
              {"right_edge", angle_json(s.right_edge())},
              {"display", sector_display(s)}};
}

json sector_report_json(const SectorReport& r) {
  return json{{"sector", sector_json(r.sector)},
              {"count", r.count},
              {"non_hurwitz_count", r.non_hurwitz_count},
              {"attaining_left",
               json{{"index", r.attaining_left_index},
                    {"coefficients", polynomial_json(r.attaining_left)}}},
              {"attaining_right",
               json{{"index", r.attaining_right_index},
                    {"coefficients", polynomial_json(r.attaining_right)}}}};
}

std::string dump(json j) { return j.dump(2) + "\n"; }

void text_header(std::ostream& out, const char* command,
                 const Problem& problem) {
  out << "== " << command << " ==\n";
  out << "problem: " << (problem.name.empty() ? "(unnamed)" : problem.name)
      << "  degree " << problem.poly.degree() << "  "
      << (problem.poly.is_real() ? "real" : "complex") << "\n";
  for (int n = 0; n <= problem.poly.degree(); ++n) {
    const ComplexIntervalBox& box = problem.poly.coeff(n);
    out << "  [" << box.re.lo << ", " << box.re.hi << "]";
    if (!problem.poly.is_real()) {
      out << " + i[" << box.im.lo << ", " << box.im.hi << "]";
    }
    out << " s^" << n << "\n";
  }
}

void text_bracket(std::ostream& out, const char* label, const Bracket& b) {
  out << label << ": [" << printf_str("%.6f", rad_to_pi_fraction(b.lo)) << ", "
      << printf_str("%.6f", rad_to_pi_fraction(b.hi)) << "] pi = ["
      << printf_str("%.4f", rad_to_deg(b.lo)) << ", "
      << printf_str("%.4f", rad_to_deg(b.hi)) << "] deg  ("
      << b.iterations << " iterations, width "
      << printf_str("%.2e", rad_to_pi_fraction(b.hi - b.lo)) << " pi)\n";
  if (b.scan_monotone.has_value()) {
    out << "  grid scan: "
        << (*b.scan_monotone ? "monotone" : "NON-MONOTONE (anomaly)") << "\n";
  }
}

void text_sector_report(std::ostream& out, const char* label,
                        const SectorReport& r) {
  out << label << ": " << sector_display(r.sector) << "  alpha "
      << angle_display(r.sector.alpha) << ", beta "
      << angle_display(r.sector.beta) << "\n";
  out << "  over " << r.count << " polynomials";
  if (r.non_hurwitz_count > 0) {
    out << "  [" << r.non_hurwitz_count << " NOT Hurwitz]";
  }
  out << "\n";
  out << "  left attained by  #" << r.attaining_left_index << ": "
      << format_polynomial(r.attaining_left) << "\n";
  out << "  right attained by #" << r.attaining_right_index << ": "
      << format_polynomial(r.attaining_right) << "\n";
}

void text_footer(std::ostream& out, double elapsed_ms) {
  out << "elapsed: " << printf_str("%.1f", elapsed_ms) << " ms\n";
}

}  // namespace

std::string format_angle(double radians) { return angle_display(radians); }

std::string format_complex(Complex c) {
  std::ostringstream out;
  out << c.real();
  if (c.imag() != 0.0) {
    out << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  }
  return out.str();
}

std::string format_polynomial(const PointPolynomial& p) {
  std::ostringstream out;
  for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
    const Complex& c = p.coeffs[n];
    if (c.imag() != 0.0) {
      if (n > 0) out << " + ";
      out << "(" << format_complex(c) << ")";
    } else if (n > 0) {
      out << (c.real() < 0 ? " - " : " + ") << std::abs(c.real());
    } else {
      out << c.real();
    }
    if (n >= 1) out << " s";
    if (n >= 2) out << "^" << n;
  }
  return out.str();
}

std::string render_certify(const Problem& problem, const Certificate& cert,
                           const std::vector<PointPolynomial>& vertices,
                           Format format, double elapsed_ms) {
  if (format == Format::Machine) {
    json margins = json::array();
    for (double m : cert.margins) margins.push_back(m);
    json vs = json::array();
    for (const PointPolynomial& v : vertices) vs.push_back(polynomial_json(v));
    json cj{{"hurwitz", cert.hurwitz},
            {"family_size", cert.family_size},
            {"margins", margins},
            {"failing_index", cert.failing_index.has_value()
                                  ? json(*cert.failing_index)
                                  : json(nullptr)},
            {"vertices", vs}};
    return dump(json{{"command", "certify"},
                     {"problem", problem_json(problem)},
                     {"certificate", cj}});
  }

  std::ostringstream out;
  text_header(out, "certify", problem);
  out << "Kharitonov vertices (" << cert.family_size << "):\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << "  K" << i + 1 << ": " << format_polynomial(vertices[i]);
    if (i < cert.margins.size()) {
      out << "   margin " << printf_str("%.6g", cert.margins[i]);
    }
    out << "\n";
  }
  out << "Hurwitz: " << (cert.hurwitz ? "true" : "false") << " ("
      << cert.margins.size() << "/" << cert.family_size << " vertices)";
  if (cert.failing_index.has_value()) {
    out << "  failing vertex K" << *cert.failing_index + 1;
  }
  out << "\n";
  text_footer(out, elapsed_ms);
  return out.str();
}

std::string render_bisect(const Problem& problem,
                          const std::optional<Bracket>& left,
                          const std::optional<Bracket>& right, double tol,
                          Format format, double elapsed_ms) {
  if (format == Format::Machine) {
    json out{{"command", "bisect"},
             {"problem", problem_json(problem)},
             {"tol", angle_json(tol)},
             {"left", left ? bracket_json(*left) : json(nullptr)},
             {"right", right ? bracket_json(*right) : json(nullptr)}};
    return dump(out);
  }

  std::ostringstream out;
  text_header(out, "bisect", problem);
  out << "tolerance: " << angle_display(tol) << "\n";
  if (left) text_bracket(out, "alpha bracket (left edge)", *left);
  if (right) text_bracket(out, "beta bracket (right edge)", *right);
  text_footer(out, elapsed_ms);
  return out.str();
}

std::string render_sector(const Problem& problem, const Sector& sector,
                          const Bracket& left,
                          const std::optional<Bracket>& right, double tol,
                          Format format, double elapsed_ms) {
  if (format == Format::Machine) {
    json out{{"command", "sector"},
             {"problem", problem_json(problem)},
             {"tol", angle_json(tol)},
             {"sector", sector_json(sector)},
             {"left_bracket", bracket_json(left)},
             {"right_bracket", right ? bracket_json(*right) : json(nullptr)}};
    return dump(out);
  }

  std::ostringstream out;
  text_header(out, "sector", problem);
  out << "tolerance: " << angle_display(tol) << "\n";
  text_bracket(out, "alpha bracket (left edge)", left);
  if (right) {
    text_bracket(out, "beta bracket (right edge)", *right);
  } else {
    out << "beta = alpha by conjugate symmetry (real family)\n";
  }
  out << "certified sector: " << sector_display(sector) << "\n";
  out << "  alpha " << angle_display(sector.alpha) << "\n";
  out << "  beta  " << angle_display(sector.beta) << "\n";
  text_footer(out, elapsed_ms);
  return out.str();
}

std::string render_vertices(const Problem& problem, const SectorReport& report,
                            Format format, double elapsed_ms) {
  if (format == Format::Machine) {
    return dump(json{{"command", "vertices"},
                     {"problem", problem_json(problem)},
                     {"vertex_sector", sector_report_json(report)}});
  }
  std::ostringstream out;
  text_header(out, "vertices", problem);
  text_sector_report(out, "vertex sector", report);
  text_footer(out, elapsed_ms);
  return out.str();
}

std::string render_sample(const Problem& problem, const SectorReport& report,
                          std::uint64_t seed, Format format,
                          double elapsed_ms) {
  if (format == Format::Machine) {
    return dump(json{{"command", "sample"},
                     {"problem", problem_json(problem)},
                     {"seed", seed},
                     {"sample_sector", sector_report_json(report)}});
  }
  std::ostringstream out;
  text_header(out, "sample", problem);
  out << "seed: " << seed << "\n";
  text_sector_report(out, "sampled sector", report);
  text_footer(out, elapsed_ms);
  return out.str();
}

std::string render_conjecture(const Problem& problem,
                              const ConjectureReport& report, double tol,
                              Format format, double elapsed_ms) {
  if (format == Format::Machine) {
    json out{{"command", "conjecture"},
             {"problem", problem_json(problem)},
             {"tol", angle_json(tol)},
             {"seed", report.seed},
             {"samples", report.samples},
             {"kharitonov",
              json{{"sector", sector_json(report.kharitonov)},
                   {"left_bracket", bracket_json(report.left_bracket)},
                   {"right_bracket", bracket_json(report.right_bracket)}}},
             {"vertex_sector", sector_report_json(report.vertex)},
             {"sample_sector", sector_report_json(report.sampled)},
             {"chain", json{{"alpha_holds", report.chain_alpha},
                            {"beta_holds", report.chain_beta},
                            {"holds", report.chain_alpha && report.chain_beta}}},
             {"counterexample", json{{"left", report.counterexample_left},
                                     {"right", report.counterexample_right}}}};
    return dump(out);
  }

  std::ostringstream out;
  text_header(out, "conjecture", problem);
  out << "tolerance: " << angle_display(tol) << "  seed: " << report.seed
      << "  samples: " << report.samples << "\n";
  out << "certified sector K: " << sector_display(report.kharitonov) << "\n";
  text_bracket(out, "  alpha bracket", report.left_bracket);
  text_bracket(out, "  beta bracket ", report.right_bracket);
  text_sector_report(out, "vertex sector V", report.vertex);
  text_sector_report(out, "sampled sector S", report.sampled);
  out << "containment chain K >= V >= S: "
      << (report.chain_alpha && report.chain_beta ? "holds" : "VIOLATED")
      << " (alpha " << (report.chain_alpha ? "ok" : "violated") << ", beta "
      << (report.chain_beta ? "ok" : "violated") << ")\n";
  if (report.counterexample_left || report.counterexample_right) {
    out << "conjecture counterexample: a sampled member escapes the vertex "
           "sector (left="
        << (report.counterexample_left ? "yes" : "no")
        << ", right=" << (report.counterexample_right ? "yes" : "no") << ")\n";
  } else {
    out << "no sampled member escapes the vertex sector\n";
  }
  text_footer(out, elapsed_ms);
  return out.str();
}

}  // namespace ksector
