#include "tristate/commands.hpp"

#include <cmath>

#include "tristate/error.hpp"

namespace tristate {

namespace {

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::InvalidInput || c == ErrorCode::DegeneratePerturbation ||
         c == ErrorCode::CollinearPerturbations || c == ErrorCode::ZeroMatrix || c == ErrorCode::NotOrthonormal;
}

Json error_json(const Error& e) {
  Json j;
  j["code"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  return j;
}

void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << doc.dump(2) << '\n';
  } else {
    out << to_text(doc);
  }
}

std::string_view status_of(int exit) {
  switch (exit) {
    case exit_code::kOk: return "ok";
    case exit_code::kInputError: return "input-error";
    case exit_code::kUndefinedPhase: return "undefined-phase";
    default: return "disagreement";
  }
}

void finish_report(PhaseReport& rep, const PhaseFlags& flags, const InputDocument* in) {
  const Tolerances tol = in ? in->tol : Tolerances{};
  const ContinuationOptions copts = in ? in->oracle : ContinuationOptions{};
  rep.region = classify(*rep.frame, tol);
  const bool undefined = !rep.region->phase;
  if (flags.oracle || undefined || rep.region->oracle_advised)
    rep.oracle = continuation(rep.frame->F, rep.frame->G, copts);
  if (flags.nearest) rep.nearest = nearest_degenerate(*rep.frame, in ? in->nearest : NearestOptions{}, tol);
  if (rep.oracle && rep.region->phase)
    rep.agreement = rep.oracle->reliable && rep.oracle->gamma[0] == *rep.region->phase;
  rep.exit = undefined ? exit_code::kUndefinedPhase : exit_code::kOk;
  // Parities label F's eigenstates in descending order, i.e. the frame basis.
  if (in && in->parity) {
    try {
      rep.mirror = mirror_report(rep.frame->F, rep.frame->G, *in->parity, 32, copts);
    } catch (const Error& e) {
      rep.note = std::string("mirror analysis skipped: ") + e.what();
    }
  }
}

}  // namespace

Json PhaseReport::to_json() const {
  Json j;
  j["status"] = std::string(status_of(exit));
  if (!error.is_null()) j["error"] = error;
  if (frame) j["frame"] = tristate::to_json(*frame);
  if (region) j["classifier"] = tristate::to_json(*region);
  if (oracle) j["oracle"] = tristate::to_json(*oracle);
  if (oracle && region) j["agreement"] = agreement;
  if (nearest) j["nearest"] = tristate::to_json(*nearest);
  if (mirror) j["mirror"] = tristate::to_json(*mirror);
  if (!note.empty()) j["note"] = note;
  return j;
}

PhaseReport run_phase(const InputDocument& in, const PhaseFlags& flags) {
  PhaseReport rep;
  try {
    const OrthonormalPair pair = orthonormalize(in.f, in.g, in.tol);
    rep.frame = build_frame(pair.F, pair.G, in.tol);
  } catch (const Error& e) {
    rep.error = error_json(e);
    rep.exit = is_input_error(e.code()) ? exit_code::kInputError : exit_code::kUndefinedPhase;
    return rep;
  }
  finish_report(rep, flags, &in);
  return rep;
}

PhaseReport run_lauber() {
  PhaseReport rep;
  const double psi = std::acos(23.0 / 26.0);
  rep.frame = frame_from_coords(psi, GCoords{0.995, 0.101, 0.0, 0.0});
  finish_report(rep, PhaseFlags{.oracle = true, .nearest = true}, nullptr);
  try {
    rep.mirror = mirror_report(rep.frame->F, rep.frame->G, ParitySignature{{1, 1, -1}});
  } catch (const Error&) {
    rep.mirror.reset();
  }
  rep.note =
      "G as printed, (g1,g2,g3,g4) = (0.995, 0.101, 0, 0), is not itself degenerate but lies within "
      "nearest.distance of the degenerate set; second-order terms can push the loop into it.";
  return rep;
}

int report_input_error(const Error& e, Format format, std::ostream& out) {
  Json j;
  j["status"] = std::string(status_of(exit_code::kInputError));
  j["error"] = error_json(e);
  emit(j, format, out);
  return exit_code::kInputError;
}

int cmd_phase(const InputDocument& in, const PhaseFlags& flags, std::ostream& out) {
  const PhaseReport rep = run_phase(in, flags);
  emit(rep.to_json(), flags.format, out);
  return rep.exit;
}

int cmd_oracle(const InputDocument& in, Format format, std::ostream& out) {
  OrthonormalPair pair;
  try {
    pair = orthonormalize(in.f, in.g, in.tol);
  } catch (const Error& e) {
    return report_input_error(e, format, out);
  }
  const ContinuationResult r = continuation(pair.F, pair.G, in.oracle);
  const int exit = r.reliable ? exit_code::kOk : exit_code::kUndefinedPhase;
  Json j;
  j["status"] = std::string(status_of(exit));
  j["oracle"] = to_json(r);
  emit(j, format, out);
  return exit;
}

int cmd_diagram(const InputDocument& in, std::ostream& svg, std::ostream& diag) {
  const PhaseReport rep = run_phase(in, PhaseFlags{});
  if (!rep.frame) {
    emit(rep.to_json(), Format::Json, diag);
    return rep.exit;
  }
  if (!rep.region->point) {
    Json j = rep.to_json();
    j["status"] = std::string(status_of(exit_code::kUndefinedPhase));
    j["error"] = error_json(Error(ErrorCode::ExcludedPoint, "the frame has no image in the triangle"));
    emit(j, Format::Json, diag);
    return exit_code::kUndefinedPhase;
  }
  svg << render_svg(*rep.frame, *rep.region);
  return exit_code::kOk;
}

int cmd_nearest(const InputDocument& in, Format format, std::ostream& out) {
  const PhaseReport rep = run_phase(in, PhaseFlags{.oracle = false, .nearest = true, .format = format});
  Json j;
  j["status"] = std::string(status_of(rep.nearest ? exit_code::kOk : rep.exit));
  if (!rep.error.is_null()) j["error"] = rep.error;
  if (rep.frame) j["frame"] = to_json(*rep.frame);
  if (rep.nearest) j["nearest"] = to_json(*rep.nearest);
  emit(j, format, out);
  return rep.nearest ? exit_code::kOk : rep.exit;
}

int cmd_scan(const ScanOptions& opts, Format format, std::ostream& out) {
  const ScanReport r = scan(opts);
  const int exit = r.disagreements == 0 ? exit_code::kOk : exit_code::kScanDisagreement;
  Json j;
  j["status"] = std::string(status_of(exit));
  j["scan"] = to_json(r, opts);
  emit(j, format, out);
  return exit;
}

int cmd_lauber(Format format, std::ostream& out) {
  const PhaseReport rep = run_lauber();
  emit(rep.to_json(), format, out);
  return rep.exit;
}

}  // namespace tristate
