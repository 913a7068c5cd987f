#include "tristate/io.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

#include "tristate/error.hpp"

namespace tristate {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, path + ": " + what);
}

SymMatrix3 parse_matrix(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) bad(key, "missing");
  const Json& m = doc.at(key);
  if (!m.is_array() || m.size() != 3) bad(key, "expected a 3x3 array");
  double a[3][3];
  for (int i = 0; i < 3; ++i) {
    const std::string row = key + "[" + std::to_string(i) + "]";
    if (!m[i].is_array() || m[i].size() != 3) bad(row, "expected 3 numbers");
    for (int j = 0; j < 3; ++j) {
      const std::string cell = row + "[" + std::to_string(j) + "]";
      if (!m[i][j].is_number()) bad(cell, "not a number");
      a[i][j] = m[i][j].get<double>();
      if (!std::isfinite(a[i][j])) bad(cell, "not finite");
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(a[i][j] - a[j][i]) > 1e-9)
        bad(key + "[" + std::to_string(j) + "][" + std::to_string(i) + "]", "matrix is not symmetric");
  return SymMatrix3::from_entries(a[0][0], a[1][1], a[2][2], a[1][2], a[0][2], a[0][1]);
}

template <class T>
void override_number(const Json& o, const char* key, T& target) {
  if (!o.contains(key)) return;
  const Json& v = o.at(key);
  const std::string path = std::string("overrides.") + key;
  if (!v.is_number()) bad(path, "not a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() || v.get<long long>() <= 0) bad(path, "expected a positive integer");
    target = v.get<T>();
  } else {
    const double x = v.get<double>();
    if (!(x > 0) || !std::isfinite(x)) bad(path, "expected a positive number");
    target = x;
  }
}

Json number_or_null(const std::optional<double>& x) {
  if (x && std::isfinite(*x)) return *x;
  return nullptr;
}

Json triple(const std::array<int, 3>& a) { return Json::array({a[0], a[1], a[2]}); }

}  // namespace

InputDocument parse_input(const Json& doc) {
  if (!doc.is_object()) bad("$", "expected a JSON object");
  InputDocument in;
  in.f = parse_matrix(doc, "f");
  in.g = parse_matrix(doc, "g");
  if (doc.contains("parity")) {
    const Json& p = doc.at("parity");
    if (!p.is_array() || p.size() != 3) bad("parity", "expected three entries of +1/-1");
    ParitySignature sig;
    for (int i = 0; i < 3; ++i) {
      if (!p[i].is_number_integer() || std::abs(p[i].get<int>()) != 1)
        bad("parity[" + std::to_string(i) + "]", "expected +1 or -1");
      sig.p[i] = p[i].get<int>();
    }
    in.parity = sig;
  }
  if (doc.contains("overrides")) {
    const Json& o = doc.at("overrides");
    if (!o.is_object()) bad("overrides", "expected an object");
    override_number(o, "steps", in.oracle.steps);
    override_number(o, "max_refine", in.oracle.max_refine);
    override_number(o, "gap_floor", in.oracle.gap_floor);
    override_number(o, "odef_tol", in.oracle.odef_tol);
    override_number(o, "zero", in.tol.zero);
    override_number(o, "boundary", in.tol.boundary);
    override_number(o, "psi_tol", in.tol.psi);
    override_number(o, "grid", in.nearest.grid);
    override_number(o, "refine_iters", in.nearest.refine_iters);
  }
  return in;
}

InputDocument parse_input_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    bad("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

Json to_json(const GCoords& g, std::string_view prefix) {
  const std::string p(prefix);
  Json j;
  j[p + "1"] = g.g1;
  j[p + "2"] = g.g2;
  j[p + "3"] = g.g3;
  j[p + "4"] = g.g4;
  return j;
}

Json to_json(const GeodesicFrame& frame) {
  Json j;
  j["psi"] = frame.psi;
  j["g"] = to_json(frame.g);
  j["g_raw"] = to_json(frame.g_raw);
  Json flips = Json::array();
  for (Flip f : frame.applied_flips) flips.push_back(std::string(to_string(f)));
  j["appliedFlips"] = flips;
  return j;
}

Json to_json(const RegionResult& r) {
  Json j;
  j["region"] = std::string(to_string(r.region));
  j["phase"] = r.phase ? Json(*r.phase) : Json(nullptr);
  j["specialCase"] = std::string(to_string(r.special));
  if (r.point) {
    j["v1"] = r.point->v[0];
    j["v2"] = r.point->v[1];
    j["v3"] = r.point->v[2];
    j["C"] = r.point->C;
    j["S"] = r.point->S;
  } else {
    j["C"] = nullptr;
    j["S"] = nullptr;
  }
  j["u"] = number_or_null(r.u);
  j["distanceToDegenerateArc"] = number_or_null(r.distance_to_degenerate_arc);
  if (r.g4_critical) j["g4c"] = *r.g4_critical;
  j["oracleAdvised"] = r.oracle_advised;
  return j;
}

Json to_json(const ContinuationResult& r) {
  Json j;
  j["gamma1"] = r.gamma[0];
  j["gamma2"] = r.gamma[1];
  j["gamma3"] = r.gamma[2];
  j["minGap"] = r.min_gap;
  j["minGapTheta"] = r.min_gap_theta;
  j["steps"] = r.steps;
  j["overlapDefect"] = r.overlap_defect;
  j["reliable"] = r.reliable;
  return j;
}

Json to_json(const NearestResult& r) {
  Json j;
  j["branch"] = std::string(to_string(r.point.branch));
  j["n"] = Json::array({r.point.n[0], r.point.n[1], r.point.n[2]});
  j["b"] = to_json(r.point.b, "b");
  j["b_canonical"] = to_json(r.canonical, "b");
  j["c"] = r.point.c;
  j["s"] = r.point.s;
  j["distance"] = r.distance;
  j["excludedCells"] = r.excluded_cells;
  return j;
}

Json to_json(const MirrorReport& r) {
  Json j;
  j["sigma"] = triple(r.sigma);
  j["gamma"] = triple(r.gamma);
  j["bandParity"] = triple(r.band_parity);
  j["maxResidual"] = r.max_residual;
  j["samples"] = r.samples;
  j["identityHolds"] = r.identity_holds;
  return j;
}

Json to_json(const ScanReport& r, const ScanOptions& opts) {
  Json j;
  j["samples"] = r.samples;
  j["seed"] = opts.seed;
  j["gapFloor"] = opts.gap_floor;
  j["agreements"] = r.agreements;
  j["disagreements"] = r.disagreements;
  j["skipped"] = r.skipped();
  j["skippedGap"] = r.skipped_gap;
  j["skippedUnreliable"] = r.skipped_unreliable;
  j["skippedBoundary"] = r.skipped_boundary;
  j["reliableRuns"] = r.reliable_runs;
  j["gammaPatternViolations"] = r.gamma_pattern_violations;
  Json hist = Json::array();
  for (std::size_t b = 0; b < r.gap_histogram.size(); ++b) {
    Json bin;
    bin["minGapFrom"] = 0.05 * static_cast<double>(b);
    bin["minGapTo"] = b + 1 == r.gap_histogram.size() ? Json(nullptr) : Json(0.05 * static_cast<double>(b + 1));
    bin["count"] = r.gap_histogram[b];
    hist.push_back(bin);
  }
  j["minGapHistogram"] = hist;
  j["disagreementIndices"] = r.disagreement_indices;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  if (j.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(10) << j.get<double>();
    out.emplace_back(prefix, os.str());
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string to_text(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  return os.str();
}

namespace {

std::string pt(const Point2& p) {
  std::ostringstream os;
  os << std::setprecision(6) << p.C << ',' << p.S;
  return os.str();
}

Point2 toward_centroid(const Point2& v, double t) { return {v.C * (1.0 - t), v.S * (1.0 - t)}; }

std::string phase_label(int phase) { return phase > 0 ? "+1" : "-1"; }

}  // namespace

std::string render_svg(const GeodesicFrame& frame, const RegionResult& region) {
  const double g4 = frame.g.g4;
  const ArcSet arcs = ellipse_arcs(frame);
  const auto tri = triangle_vertices(frame.psi);
  std::ostringstream os;
  os << std::setprecision(6);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
        "viewBox=\"-1.2 -1.2 2.4 2.4\">\n"
     << "<title>psi=" << frame.psi << " g4=" << g4 << "</title>\n"
     << "<g transform=\"scale(1,-1)\" fill=\"none\">\n"
     << "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\" stroke-width=\"0.004\" stroke-dasharray=\"0.03 0.02\"/>\n"
     << "<polygon points=\"" << pt(tri[0]) << ' ' << pt(tri[1]) << ' ' << pt(tri[2])
     << "\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
  if (arcs.shape == ArcShape::Segment) {
    os << "<line x1=\"-1\" y1=\"0\" x2=\"1\" y2=\"0\" stroke=\"black\" stroke-width=\"0.006\"/>\n";
  } else {
    os << "<ellipse cx=\"0\" cy=\"0\" rx=\"1\" ry=\"" << arcs.semi_minor
       << "\" stroke=\"black\" stroke-width=\"0.006\"/>\n";
  }
  for (const auto& piece : arcs.active().pieces) {
    os << "<polyline class=\"degenerate-arc\" stroke=\"black\" stroke-width=\"0.03\" points=\"";
    for (std::size_t k = 0; k < piece.size(); ++k) os << (k ? " " : "") << pt(piece[k]);
    os << "\"/>\n";
  }
  if (region.point)
    os << "<circle class=\"query\" cx=\"" << region.point->C << "\" cy=\"" << region.point->S
       << "\" r=\"0.025\" fill=\"black\"/>\n";
  os << "</g>\n";

  // Labels sit outside the flipped group so the text is upright.
  auto label = [&](const Point2& p, const std::string& text) {
    os << "<text x=\"" << p.C << "\" y=\"" << -p.S << "\" font-size=\"0.08\" text-anchor=\"middle\">" << text
       << "</text>\n";
  };
  auto u_of = [&](const Point2& p) { return g4 == 0.0 ? std::numeric_limits<double>::infinity()
                                                      : p.C * p.C + p.S * p.S / (g4 * g4); };
  if (arcs.shape != ArcShape::Segment) label({0.0, 0.0}, "R2 (" + phase_label(g4 > 0 ? -1 : 1) + ")");
  // Every vertex has u >= 1, so R1 and R3 always reach the corners, but near
  // the circle case they get too thin to hold a label; then it goes outside.
  auto place = [&](const Point2& v) {
    for (double t : {0.15, 0.08, 0.04})
      if (u_of(toward_centroid(v, t)) > 1.0) return toward_centroid(v, t);
    return toward_centroid(v, -0.08);
  };
  label(place(tri[0]), "R1 (-1)");
  label(place(tri[2]), "R1 (-1)");
  label(place(tri[1]), "R3 (+1)");
  os << "</svg>\n";
  return os.str();
}

}  // namespace tristate
