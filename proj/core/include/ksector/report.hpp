#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksector/oracle.hpp"
#include "ksector/problem.hpp"

namespace ksector {

enum class Format { Text, Machine };

/// "0.252686 pi (45.4835 deg)"
std::string format_angle(double radians);

/// "3.1475-0.23i" / "4.71"
std::string format_complex(Complex c);

/// "(3.1475-0.23i) + (6.655-0.425i) s + ... s^3"
std::string format_polynomial(const PointPolynomial& p);

/// Complete report bodies, one per subcommand. The machine format is JSON and
/// contains no volatile fields (no timings), so identical inputs render to
/// identical bytes; the text format appends the elapsed time.
std::string render_certify(const Problem& problem, const Certificate& cert,
                           const std::vector<PointPolynomial>& vertices,
                           Format format, double elapsed_ms);

std::string render_bisect(const Problem& problem,
                          const std::optional<Bracket>& left,
                          const std::optional<Bracket>& right, double tol,
                          Format format, double elapsed_ms);

std::string render_sector(const Problem& problem, const Sector& sector,
                          const Bracket& left,
                          const std::optional<Bracket>& right, double tol,
                          Format format, double elapsed_ms);

std::string render_vertices(const Problem& problem, const SectorReport& report,
                            Format format, double elapsed_ms);

std::string render_sample(const Problem& problem, const SectorReport& report,
                          std::uint64_t seed, Format format,
                          double elapsed_ms);

std::string render_conjecture(const Problem& problem,
                              const ConjectureReport& report, double tol,
                              Format format, double elapsed_ms);

}  // namespace ksector
