#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tristate/classifier.hpp"
#include "tristate/degeneracy.hpp"
#include "tristate/frame.hpp"
#include "tristate/mirror.hpp"
#include "tristate/oracle.hpp"
#include "tristate/scan.hpp"
#include "tristate/tolerances.hpp"

namespace tristate {

using Json = nlohmann::ordered_json;

/// Raw perturbation pair plus optional parity and numerical overrides.
///
///   {"f": [[..],[..],[..]], "g": [[..],[..],[..]],
///    "parity": [1, 1, -1],
///    "overrides": {"steps": 4096, "zero": 1e-9, ...}}
struct InputDocument {
  SymMatrix3 f;
  SymMatrix3 g;
  std::optional<ParitySignature> parity;
  Tolerances tol;
  ContinuationOptions oracle;
  NearestOptions nearest;
};

/// Throws Error(InvalidInput) naming the offending field, e.g. "g[1][0]".
InputDocument parse_input(const Json& doc);
InputDocument parse_input_text(std::string_view text);

Json to_json(const GCoords& g, std::string_view prefix = "g");
Json to_json(const GeodesicFrame& frame);
Json to_json(const RegionResult& r);
Json to_json(const ContinuationResult& r);
Json to_json(const NearestResult& r);
Json to_json(const MirrorReport& r);
Json to_json(const ScanReport& r, const ScanOptions& opts);

/// Flattens a JSON object into aligned "key  value" lines; nested objects
/// become dotted keys.
std::string to_text(const Json& doc);

/// Triangle, reference circle, ellipse with the degenerate arc emphasised,
/// query point and region labels. viewBox is [-1.2, 1.2]^2 with S pointing up.
std::string render_svg(const GeodesicFrame& frame, const RegionResult& region);

}  // namespace tristate
