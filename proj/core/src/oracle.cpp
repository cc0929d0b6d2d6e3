#include "ksector/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

namespace ksector {
namespace {

constexpr std::uint64_t kIndexSalt = 0x9E3779B97F4A7C15ULL;

std::uint64_t sample_state(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed) ^ SplitMix64::mix(index + kIndexSalt);
}

double uniform_in(SplitMix64& gen, const RealInterval& iv) {
  const double u = gen.next_unit();
  return iv.lo + u * (iv.hi - iv.lo);
}

struct Extremum {
  double margin = std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;

  void offer(double candidate, std::uint64_t i) {
    if (candidate < margin || (candidate == margin && i < index)) {
      margin = candidate;
      index = i;
    }
  }
};

// Per-worker partial result for the sampling scan.
struct SampleChunk {
  Extremum alpha;
  Extremum beta;
  std::uint64_t non_hurwitz = 0;
  std::uint64_t hurwitz = 0;
};

std::string describe_member(const PointPolynomial& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (k > 0) out << ", ";
    out << p.coeffs[k].real() << (p.coeffs[k].imag() < 0 ? "" : "+")
        << p.coeffs[k].imag() << "i";
  }
  out << ")";
  return out.str();
}

}  // namespace

PointPolynomial member_sample(const IntervalPolynomial& p, std::uint64_t seed,
                              std::uint64_t index) {
  SplitMix64 gen(sample_state(seed, index));
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const ComplexIntervalBox& box : p.coeffs()) {
    const double re = uniform_in(gen, box.re);
    const double im = uniform_in(gen, box.im);
    c.emplace_back(re, im);
  }
  return PointPolynomial(std::move(c));
}

SectorReport vertex_sector(const IntervalPolynomial& p, std::uint64_t cap) {
  const VertexEnumerator en(p, cap);
  Extremum alpha, beta;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    const PointPolynomial v = en.vertex(i);
    const RootSet rs = roots(v);
    double margin = -std::numeric_limits<double>::infinity();
    for (const Complex& z : rs.roots) {
      margin = std::max(margin, z.real());
    }
    if (margin >= 0.0) {
      std::ostringstream msg;
      msg << "vertex " << i << " " << describe_member(v)
          << " is not Hurwitz (margin " << margin
          << "); the family is not Hurwitz";
      throw NotHurwitzVertexError(msg.str(), i, margin);
    }
    const Sector s = sector_of_roots(rs.roots);
    alpha.offer(s.alpha, i);
    beta.offer(s.beta, i);
  }
  return SectorReport{Sector{alpha.margin, beta.margin},
                      en.vertex(alpha.index),
                      en.vertex(beta.index),
                      en.count(),
                      alpha.index,
                      beta.index,
                      0};
}

SectorReport sample_sector(const IntervalPolynomial& p, std::uint64_t count,
                           std::uint64_t seed, int threads) {
  if (count < 1) {
    throw ValidationError("sample count must be at least 1");
  }
  unsigned worker_count =
      threads > 0 ? static_cast<unsigned>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  worker_count = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count, count));

  std::vector<SampleChunk> chunks(worker_count);
  std::mutex failure_mutex;
  std::exception_ptr failure;

  // Contiguous index ranges per worker; results depend only on sample
  // indices, so any partition merges to the same answer.
  const auto scan = [&](std::uint64_t begin, std::uint64_t end,
                        SampleChunk& chunk) {
    try {
      for (std::uint64_t i = begin; i < end; ++i) {
        const PointPolynomial member = member_sample(p, seed, i);
        RootSet rs;
        try {
          rs = roots(member);
        } catch (const NonConvergenceError& e) {
          throw NonConvergenceError(std::string(e.what()) + " on sample " +
                                    std::to_string(i) + " " +
                                    describe_member(member));
        }
        double margin = -std::numeric_limits<double>::infinity();
        for (const Complex& z : rs.roots) {
          margin = std::max(margin, z.real());
        }
        if (margin >= 0.0) {
          ++chunk.non_hurwitz;
          continue;
        }
        const Sector s = sector_of_roots(rs.roots);
        chunk.alpha.offer(s.alpha, i);
        chunk.beta.offer(s.beta, i);
        ++chunk.hurwitz;
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (worker_count <= 1) {
    scan(0, count, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    const std::uint64_t per = count / worker_count;
    const std::uint64_t extra = count % worker_count;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < worker_count; ++w) {
      const std::uint64_t end = begin + per + (w < extra ? 1 : 0);
      pool.emplace_back(scan, begin, end, std::ref(chunks[w]));
      begin = end;
    }
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Extremum alpha, beta;
  std::uint64_t non_hurwitz = 0;
  std::uint64_t hurwitz = 0;
  for (const SampleChunk& chunk : chunks) {
    if (chunk.hurwitz > 0) {
      alpha.offer(chunk.alpha.margin, chunk.alpha.index);
      beta.offer(chunk.beta.margin, chunk.beta.index);
    }
    non_hurwitz += chunk.non_hurwitz;
    hurwitz += chunk.hurwitz;
  }
  if (hurwitz == 0) {
    throw NotHurwitzError(
        "every sampled member failed the Hurwitz test; no sector exists");
  }

  return SectorReport{Sector{alpha.margin, beta.margin},
                      member_sample(p, seed, alpha.index),
                      member_sample(p, seed, beta.index),
                      count,
                      alpha.index,
                      beta.index,
                      non_hurwitz};
}

ConjectureReport conjecture_experiment(const IntervalPolynomial& p,
                                       std::uint64_t count, std::uint64_t seed,
                                       const BisectOptions& options,
                                       std::uint64_t cap, int threads) {
  const Bracket left = bisect(p, Side::Left, options);
  const Bracket right = p.is_real() ? left : bisect(p, Side::Right, options);
  const Sector certified{left.lo, right.lo};

  SectorReport vertex = vertex_sector(p, cap);
  SectorReport sampled = sample_sector(p, count, seed, threads);

  ConjectureReport report{certified,
                          left,
                          right,
                          std::move(vertex),
                          std::move(sampled),
                          false,
                          false,
                          false,
                          false,
                          count,
                          seed};
  report.chain_alpha = certified.alpha <= report.vertex.sector.alpha &&
                       report.vertex.sector.alpha <= report.sampled.sector.alpha;
  report.chain_beta = certified.beta <= report.vertex.sector.beta &&
                      report.vertex.sector.beta <= report.sampled.sector.beta;
  report.counterexample_left =
      report.sampled.sector.alpha < report.vertex.sector.alpha;
  report.counterexample_right =
      report.sampled.sector.beta < report.vertex.sector.beta;
  return report;
}

}  // namespace ksector
