#include "tristate/frame.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tristate/error.hpp"

namespace tristate {

double GCoords::norm() const { return std::sqrt(g1 * g1 + g2 * g2 + g3 * g3 + g4 * g4); }

std::string_view to_string(Flip f) {
  switch (f) {
    case Flip::Global: return "global";
    case Flip::Pair12: return "pair12";
    case Flip::Pair23: return "pair23";
    case Flip::Pair13: return "pair13";
  }
  return "?";
}

bool GeodesicFrame::global_flipped() const {
  for (Flip f : applied_flips)
    if (f == Flip::Global) return true;
  return false;
}

OrthonormalPair orthonormalize(const SymMatrix3& f, const SymMatrix3& g, const Tolerances& tol) {
  const SymMatrix3 fd = detrace(f);
  if (frobenius(fd) <= tol.degenerate_f * std::max(1.0, frobenius(f)))
    throw Error(ErrorCode::DegeneratePerturbation, "f is a multiple of the identity");
  const SymMatrix3 F = normalize(fd, tol);

  const SymMatrix3 gd = detrace(g);
  const double gscale = frobenius(gd);
  if (gscale <= tol.degenerate_f * std::max(1.0, frobenius(g)))
    throw Error(ErrorCode::CollinearPerturbations, "g is a multiple of the identity");
  const SymMatrix3 residual = gd - inner(gd, F) * F;
  if (frobenius(residual) <= tol.collinear * gscale)
    throw Error(ErrorCode::CollinearPerturbations, "g is parallel to f; the family has no loop");
  return {F, normalize(residual, tol)};
}

std::pair<GCoords, std::vector<Flip>> canonicalize_signs(const GCoords& g) {
  GCoords c = g;
  std::vector<Flip> flips;
  const int negatives = (c.g1 < 0) + (c.g2 < 0) + (c.g3 < 0);
  if (negatives % 2 == 1) {
    c = -c;
    flips.push_back(Flip::Global);
  }
  if (c.g1 < 0 && c.g2 < 0) {
    c.g1 = -c.g1;
    c.g2 = -c.g2;
    flips.push_back(Flip::Pair12);
  }
  if (c.g2 < 0 && c.g3 < 0) {
    c.g2 = -c.g2;
    c.g3 = -c.g3;
    flips.push_back(Flip::Pair23);
  }
  if (c.g1 < 0 && c.g3 < 0) {
    c.g1 = -c.g1;
    c.g3 = -c.g3;
    flips.push_back(Flip::Pair13);
  }
  return {c, flips};
}

SymMatrix3 matrix_from_coords(const GCoords& g, double psi) {
  return g.g4 * companion(psi) + g.g1 * qbasis::Q1 + g.g2 * qbasis::Q2 + g.g3 * qbasis::Q3;
}

namespace {

// Axis sign changes realising each pair flip: conjugating by diag(d) scales
// the (i,j) entry by d_i d_j.
std::array<int, 3> axis_signs(Flip f) {
  switch (f) {
    case Flip::Pair12: return {1, 1, -1};
    case Flip::Pair23: return {-1, 1, 1};
    case Flip::Pair13: return {1, -1, 1};
    case Flip::Global: break;
  }
  return {1, 1, 1};
}

void check_anchor(double psi, const Tolerances& tol) {
  if (psi <= tol.psi || psi >= std::numbers::pi / 3.0 - tol.psi)
    throw Error(ErrorCode::DegenerateAnchor,
                "psi = " + std::to_string(psi) + " puts F on the degenerate set; no phase is defined");
}

GeodesicFrame assemble(double psi, const SymMatrix3& g_frame, Mat3 rotation) {
  GeodesicFrame fr;
  fr.psi = psi;
  fr.F = diagonal_anchor(psi);
  fr.E = companion(psi);
  fr.g_raw = {inner(g_frame, qbasis::Q1), inner(g_frame, qbasis::Q2), inner(g_frame, qbasis::Q3),
              inner(g_frame, fr.E)};
  auto [canon, flips] = canonicalize_signs(fr.g_raw);
  fr.g = canon;
  fr.applied_flips = flips;

  SymMatrix3 g_canon = g_frame;
  for (Flip f : flips) {
    if (f == Flip::Global) {
      g_canon = -g_canon;
      continue;
    }
    const auto d = axis_signs(f);
    g_canon = conjugate_by_signs(g_canon, d);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rotation[i][j] *= d[j];
  }
  fr.G = g_canon;
  fr.basis_rotation = rotation;
  return fr;
}

}  // namespace

GeodesicFrame build_frame(const SymMatrix3& F, const SymMatrix3& G, const Tolerances& tol) {
  const double ff = inner(F, F), gg = inner(G, G), fg = inner(F, G);
  if (std::abs(ff - 1.0) > tol.orthonormal || std::abs(gg - 1.0) > tol.orthonormal ||
      std::abs(fg) > tol.orthonormal || !is_traceless(F, tol) || !is_traceless(G, tol))
    throw Error(ErrorCode::NotOrthonormal, "(F, G) must be traceless, unit-norm and orthogonal");

  const double psi = psi_of(F, tol);
  check_anchor(psi, tol);
  const Spectrum s = eig(F);
  const Mat3 r = s.rotation();
  return assemble(psi, in_basis(G, r), r);
}

GeodesicFrame frame_from_coords(double psi, const GCoords& g, const Tolerances& tol) {
  check_anchor(psi, tol);
  const double n = g.norm();
  if (!(n > 0.0)) throw Error(ErrorCode::ZeroMatrix, "g coordinates are all zero");
  const GCoords unit{g.g1 / n, g.g2 / n, g.g3 / n, g.g4 / n};
  Mat3 id{};
  for (int i = 0; i < 3; ++i) id[i][i] = 1.0;
  return assemble(psi, matrix_from_coords(unit, psi), id);
}

}  // namespace tristate
