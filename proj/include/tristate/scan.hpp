#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tristate/classifier.hpp"
#include "tristate/frame.hpp"
#include "tristate/oracle.hpp"
#include "tristate/tolerances.hpp"

namespace tristate {

struct ScanOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double gap_floor = 0.05;  // samples whose oracle min gap is below this are skipped
  double margin = 0.02;     // exclusion distance around the special loci
  ContinuationOptions oracle;
  Tolerances tol;
};

enum class SampleOutcome { Agree, Disagree, SkippedGap, SkippedUnreliable, SkippedBoundary };

struct ScanSample {
  double psi = 0.0;
  GCoords g;  // canonical
  SymMatrix3 F;  // as drawn, in a random basis
  SymMatrix3 G;
  Region region = Region::Degenerate;
  std::optional<int> classifier_phase;
  ContinuationResult oracle;
  SampleOutcome outcome = SampleOutcome::SkippedBoundary;
  /// gamma2 = +1 and gamma1 = gamma3; only meaningful for reliable oracle runs.
  bool gamma_pattern_ok = true;
};

struct ScanReport {
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t skipped_gap = 0;
  std::size_t skipped_unreliable = 0;
  std::size_t skipped_boundary = 0;
  std::size_t reliable_runs = 0;
  std::size_t gamma_pattern_violations = 0;
  /// min gap histogram: bins of width 0.05 over [0, 0.5) plus one overflow bin.
  std::array<std::size_t, 11> gap_histogram{};
  std::vector<std::size_t> disagreement_indices;

  std::size_t skipped() const { return skipped_gap + skipped_unreliable + skipped_boundary; }
};

/// Sample i of the scan. Depends only on (seed, i), never on evaluation order.
ScanSample scan_sample(const ScanOptions& opts, std::size_t index);

/// Draw the random frame of sample i without running either phase route.
struct DrawnPair {
  double psi = 0.0;
  GCoords g_raw;
  SymMatrix3 F;
  SymMatrix3 G;
};
DrawnPair draw_pair(const ScanOptions& opts, std::size_t index);

/// Classifier versus continuation over opts.samples random frames; samples
/// are distributed across OpenMP threads and reduced in index order.
ScanReport scan(const ScanOptions& opts);
/// Reference: identical work in a plain loop.
ScanReport scan_serial(const ScanOptions& opts);

ScanReport reduce(const std::vector<ScanSample>& samples);

}  // namespace tristate
