#pragma once

#include <optional>
#include <ostream>

#include "tristate/error.hpp"
#include "tristate/io.hpp"

namespace tristate {

/// Process exit statuses shared by every subcommand.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUndefinedPhase = 2;  // Degenerate / Boundary / unreliable
inline constexpr int kScanDisagreement = 3;
}  // namespace exit_code

enum class Format { Json, Text };

struct PhaseFlags {
  bool oracle = false;
  bool nearest = false;
  Format format = Format::Json;
};

/// Structured result of the end-to-end pipeline; the commands render it.
struct PhaseReport {
  std::optional<GeodesicFrame> frame;
  std::optional<RegionResult> region;
  std::optional<ContinuationResult> oracle;
  std::optional<NearestResult> nearest;
  std::optional<MirrorReport> mirror;
  bool agreement = false;
  int exit = exit_code::kOk;
  Json error;  // {"code", "message"} when the pipeline stopped early
  std::string note;

  Json to_json() const;
};

PhaseReport run_phase(const InputDocument& in, const PhaseFlags& flags);
/// Frame from arccos(23/26) and (g1,g2,g3,g4) = (0.995, 0.101, 0, 0) renormalised,
/// with oracle, nearest degenerate point and mirror analysis for parities (+,+,-).
PhaseReport run_lauber();

int cmd_phase(const InputDocument& in, const PhaseFlags& flags, std::ostream& out);
int cmd_oracle(const InputDocument& in, Format format, std::ostream& out);
int cmd_diagram(const InputDocument& in, std::ostream& svg, std::ostream& diag);
int cmd_nearest(const InputDocument& in, Format format, std::ostream& out);
int cmd_scan(const ScanOptions& opts, Format format, std::ostream& out);
int cmd_lauber(Format format, std::ostream& out);

/// Renders an input-stage failure and returns kInputError.
int report_input_error(const Error& e, Format format, std::ostream& out);

}  // namespace tristate
