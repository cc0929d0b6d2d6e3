#include "ksector/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ksector/report.hpp"

namespace ksector::cli {
namespace {

struct CommonOptions {
  std::string problem_path;
  std::string format = "text";
  std::string tol_spec;
  std::string side = "both";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t max_vertices = kDefaultVertexCap;
  bool scan_check = false;
};

class Timer {
 public:
  [[nodiscard]] double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "machine") return Format::Machine;
  throw ValidationError("unknown format '" + text + "' (text|machine)");
}

BisectOptions make_bisect_options(const CommonOptions& opts) {
  BisectOptions out;
  if (!opts.tol_spec.empty()) {
    out.tol = parse_angle_spec(opts.tol_spec);
    if (!(out.tol > 0.0)) {
      throw ValidationError("tolerance must be positive");
    }
  }
  out.scan_check = opts.scan_check;
  return out;
}

void add_common_flags(CLI::App& cmd, CommonOptions& opts, bool with_tol,
                      bool with_side, bool with_samples, bool with_vertices,
                      bool with_scan) {
  cmd.add_option("problem", opts.problem_path, "problem file (JSON)")
      ->required();
  cmd.add_option("--format", opts.format, "report format: text|machine");
  if (with_tol) {
    cmd.add_option("--tol", opts.tol_spec,
                   "bisection tolerance in radians, or with a 'pi' suffix "
                   "(default 1e-4pi)");
  }
  if (with_side) {
    cmd.add_option("--side", opts.side, "left|right|both");
  }
  if (with_samples) {
    cmd.add_option("--samples", opts.samples, "number of member draws");
    cmd.add_option("--seed", opts.seed, "base seed of the draw stream");
  }
  if (with_vertices) {
    cmd.add_option("--max-vertices", opts.max_vertices,
                   "vertex enumeration cap");
  }
  if (with_scan) {
    cmd.add_flag("--scan-check", opts.scan_check,
                 "grid-scan the bisection predicate for monotonicity");
  }
}

int run_certify(const CommonOptions& opts, std::ostream& out) {
  const Format format = parse_format(opts.format);
  const Timer timer;
  const Problem problem = parse_problem(opts.problem_path);
  const Certificate cert = certify(problem.poly);
  const std::vector<PointPolynomial> vertices = problem.poly.is_real()
                                                    ? k4_vertices(problem.poly)
                                                    : k8_vertices(problem.poly);
  out << render_certify(problem, cert, vertices, format, timer.elapsed_ms());
  return cert.hurwitz ? kOk : kCertificateFalse;
}

int run_bisect(const CommonOptions& opts, std::ostream& out) {
  const Format format = parse_format(opts.format);
  const Timer timer;
  const Problem problem = parse_problem(opts.problem_path);
  const BisectOptions bopts = make_bisect_options(opts);

  std::optional<Bracket> left;
  std::optional<Bracket> right;
  if (opts.side == "left" || opts.side == "both") {
    left = bisect(problem.poly, Side::Left, bopts);
  }
  if (opts.side == "right" || opts.side == "both") {
    right = bisect(problem.poly, Side::Right, bopts);
  }
  if (!left && !right) {
    throw ValidationError("unknown side '" + opts.side + "' (left|right|both)");
  }
  out << render_bisect(problem, left, right, bopts.tol, format,
                       timer.elapsed_ms());
  return kOk;
}

int run_sector(const CommonOptions& opts, std::ostream& out) {
  const Format format = parse_format(opts.format);
  const Timer timer;
  const Problem problem = parse_problem(opts.problem_path);
  const BisectOptions bopts = make_bisect_options(opts);

  const Bracket left = bisect(problem.poly, Side::Left, bopts);
  std::optional<Bracket> right;
  if (!problem.poly.is_real()) {
    right = bisect(problem.poly, Side::Right, bopts);
  }
  const Sector sector{left.lo, right ? right->lo : left.lo};
  out << render_sector(problem, sector, left, right, bopts.tol, format,
                       timer.elapsed_ms());
  return kOk;
}

int run_vertices(const CommonOptions& opts, std::ostream& out) {
  const Format format = parse_format(opts.format);
  const Timer timer;
  const Problem problem = parse_problem(opts.problem_path);
  const SectorReport report = vertex_sector(problem.poly, opts.max_vertices);
  out << render_vertices(problem, report, format, timer.elapsed_ms());
  return kOk;
}

int run_sample(const CommonOptions& opts, std::ostream& out) {
  const Format format = parse_format(opts.format);
  const Timer timer;
  const Problem problem = parse_problem(opts.problem_path);
  const SectorReport report =
      sample_sector(problem.poly, opts.samples, opts.seed);
  out << render_sample(problem, report, opts.seed, format,
                       timer.elapsed_ms());
  // Non-Hurwitz samples refute the family's certificate.
  return report.non_hurwitz_count == 0 ? kOk : kCertificateFalse;
}

int run_conjecture(const CommonOptions& opts, std::ostream& out) {
  const Format format = parse_format(opts.format);
  const Timer timer;
  const Problem problem = parse_problem(opts.problem_path);
  const BisectOptions bopts = make_bisect_options(opts);
  const ConjectureReport report = conjecture_experiment(
      problem.poly, opts.samples, opts.seed, bopts, opts.max_vertices);
  out << render_conjecture(problem, report, bopts.tol, format,
                           timer.elapsed_ms());
  return kOk;
}

}  // namespace

double parse_angle_spec(const std::string& text) {
  std::string number = text;
  double factor = 1.0;
  const auto pos = text.find("pi");
  if (pos != std::string::npos) {
    if (text.find_first_not_of(" \t", pos + 2) != std::string::npos) {
      throw ValidationError("bad angle '" + text + "': 'pi' must be a suffix");
    }
    number = text.substr(0, pos);
    factor = kPi;
    // Bare "pi" means 1*pi.
    if (number.find_first_not_of(" \t") == std::string::npos) {
      number = "1";
    }
  }
  try {
    std::size_t consumed = 0;
    const double value = std::stod(number, &consumed);
    if (number.find_first_not_of(" \t", consumed) != std::string::npos) {
      throw std::invalid_argument(number);
    }
    return value * factor;
  } catch (const std::exception&) {
    throw ValidationError("bad angle '" + text +
                          "': expected radians or '<number>pi'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Kharitonov stability certificates and root sectors for "
               "interval polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ksector 0.1.0");

  CommonOptions opts;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "Kharitonov Hurwitz certificate");
  add_common_flags(*certify_cmd, opts, false, false, false, false, false);
  CLI::App* bisect_cmd =
      app.add_subcommand("bisect", "bisect a sector edge margin");
  add_common_flags(*bisect_cmd, opts, true, true, false, false, true);
  CLI::App* sector_cmd =
      app.add_subcommand("sector", "certified containing sector");
  add_common_flags(*sector_cmd, opts, true, false, false, false, true);
  CLI::App* vertices_cmd =
      app.add_subcommand("vertices", "sector over all vertex polynomials");
  add_common_flags(*vertices_cmd, opts, false, false, false, true, false);
  CLI::App* sample_cmd =
      app.add_subcommand("sample", "sector over seeded member draws");
  add_common_flags(*sample_cmd, opts, false, false, true, false, false);
  CLI::App* conjecture_cmd = app.add_subcommand(
      "conjecture", "compare certified, vertex, and sampled sectors");
  add_common_flags(*conjecture_cmd, opts, true, false, true, true, true);

  std::vector<const char*> argv;
  argv.push_back("ksector");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << "ksector 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }

  try {
    if (certify_cmd->parsed()) return run_certify(opts, out);
    if (bisect_cmd->parsed()) return run_bisect(opts, out);
    if (sector_cmd->parsed()) return run_sector(opts, out);
    if (vertices_cmd->parsed()) return run_vertices(opts, out);
    if (sample_cmd->parsed()) return run_sample(opts, out);
    if (conjecture_cmd->parsed()) return run_conjecture(opts, out);
    err << "error: no subcommand\n";
    return kValidationFailure;
  } catch (const NotHurwitzVertexError& e) {
    err << "error: " << e.what() << "\n";
    return kCertificateFalse;
  } catch (const NotCertifiedError& e) {
    err << "error: " << e.what() << "\n";
    return kCertificateFalse;
  } catch (const TooManyVerticesError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const NotHurwitzError& e) {
    err << "error: " << e.what() << "\n";
    return kCertificateFalse;
  } catch (const Error& e) {
    // ParseError, ValidationError, NotRealError, DegenerateLeadingError.
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace ksector::cli
