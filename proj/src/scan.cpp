#include "tristate/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tristate/error.hpp"

namespace tristate {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Rotation matrix of a uniformly random unit quaternion.
Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double w, x, y, z, n;
  do {
    w = normal(rng);
    x = normal(rng);
    y = normal(rng);
    z = normal(rng);
    n = std::sqrt(w * w + x * x + y * y + z * z);
  } while (n < 1e-8);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  return Mat3{{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
               {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
               {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
}

bool near_special(const GCoords& g, double margin) {
  const double a = std::hypot(g.g1, g.g2), b = std::hypot(g.g2, g.g3), c = std::hypot(g.g1, g.g3);
  return a < margin || b < margin || c < margin || std::abs(g.g4) < margin;
}

}  // namespace

DrawnPair draw_pair(const ScanOptions& opts, std::size_t index) {
  std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(index)));
  std::uniform_real_distribution<double> uni(0.05, std::numbers::pi / 3.0 - 0.05);
  std::normal_distribution<double> normal;
  DrawnPair d;
  d.psi = uni(rng);
  do {
    GCoords g{normal(rng), normal(rng), normal(rng), normal(rng)};
    const double n = g.norm();
    d.g_raw = {g.g1 / n, g.g2 / n, g.g3 / n, g.g4 / n};
  } while (near_special(d.g_raw, opts.margin));
  const Mat3 r = random_rotation(rng);
  d.F = from_basis(diagonal_anchor(d.psi), r);
  d.G = from_basis(matrix_from_coords(d.g_raw, d.psi), r);
  return d;
}

ScanSample scan_sample(const ScanOptions& opts, std::size_t index) {
  const DrawnPair d = draw_pair(opts, index);
  ScanSample s;
  s.F = d.F;
  s.G = d.G;

  const OrthonormalPair pair = orthonormalize(d.F, d.G, opts.tol);
  const GeodesicFrame frame = build_frame(pair.F, pair.G, opts.tol);
  s.psi = frame.psi;
  s.g = frame.g;
  const RegionResult rr = classify(frame, opts.tol);
  s.region = rr.region;
  s.classifier_phase = rr.phase;

  // Samples under the scan's gap floor are skipped anyway, so the oracle may
  // stop refining as soon as it sees such a gap.
  ContinuationOptions oracle = opts.oracle;
  oracle.gap_floor = std::max(oracle.gap_floor, opts.gap_floor);
  s.oracle = continuation(pair.F, pair.G, oracle);
  if (s.oracle.reliable) {
    const auto& gm = s.oracle.gamma;
    s.gamma_pattern_ok = gm[1] == 1 && gm[0] == gm[2];
  }

  if (s.oracle.min_gap <= opts.gap_floor) {
    s.outcome = SampleOutcome::SkippedGap;
  } else if (!s.oracle.reliable) {
    s.outcome = SampleOutcome::SkippedUnreliable;
  } else if (!rr.phase) {
    s.outcome = SampleOutcome::SkippedBoundary;
  } else {
    s.outcome = *rr.phase == s.oracle.gamma[0] ? SampleOutcome::Agree : SampleOutcome::Disagree;
  }
  return s;
}

ScanReport reduce(const std::vector<ScanSample>& samples) {
  ScanReport rep;
  rep.samples = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ScanSample& s = samples[i];
    switch (s.outcome) {
      case SampleOutcome::Agree: ++rep.agreements; break;
      case SampleOutcome::Disagree:
        ++rep.disagreements;
        rep.disagreement_indices.push_back(i);
        break;
      case SampleOutcome::SkippedGap: ++rep.skipped_gap; break;
      case SampleOutcome::SkippedUnreliable: ++rep.skipped_unreliable; break;
      case SampleOutcome::SkippedBoundary: ++rep.skipped_boundary; break;
    }
    if (s.oracle.reliable) {
      ++rep.reliable_runs;
      if (!s.gamma_pattern_ok) ++rep.gamma_pattern_violations;
    }
    const auto bin = static_cast<std::size_t>(std::floor(std::max(0.0, s.oracle.min_gap) / 0.05));
    ++rep.gap_histogram[std::min<std::size_t>(bin, rep.gap_histogram.size() - 1)];
  }
  return rep;
}

ScanReport scan(const ScanOptions& opts) {
  std::vector<ScanSample> samples(opts.samples);
  const auto n = static_cast<long long>(opts.samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) samples[i] = scan_sample(opts, static_cast<std::size_t>(i));
  return reduce(samples);
}

ScanReport scan_serial(const ScanOptions& opts) {
  std::vector<ScanSample> samples;
  samples.reserve(opts.samples);
  for (std::size_t i = 0; i < opts.samples; ++i) samples.push_back(scan_sample(opts, i));
  return reduce(samples);
}

}  // namespace tristate
