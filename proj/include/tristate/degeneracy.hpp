#pragma once

#include <string_view>

#include "tristate/frame.hpp"
#include "tristate/symmat.hpp"
#include "tristate/tolerances.hpp"

namespace tristate {

/// Plus: lambda1 = lambda2 (psi = pi/3). Minus: lambda2 = lambda3 (psi = 0).
enum class Branch { Plus, Minus };

std::string_view to_string(Branch b);
inline double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

struct DegeneratePoint {
  Branch branch = Branch::Plus;
  Vec3 n{};  // nondegenerate eigenvector of the D point, in F's eigenbasis
  GCoords b;
  SymMatrix3 matrix;  // b4 E + b1 Q1 + b2 Q2 + b3 Q3
  double c = 0.0;
  double s = 0.0;
};

/// +-(1/sqrt 6)(1 - 3 |n><n|).
SymMatrix3 d_point(Branch branch, const Vec3& n);

/// Degenerate direction in the equator of F = diagonal_anchor(psi), from the
/// closed-form b-coordinates. Throws ParallelToAnchor when 1 - c^2 is below
/// tol.parallel_anchor.
DegeneratePoint b_point(Branch branch, const Vec3& n, double psi, const Tolerances& tol = {});

struct NearestOptions {
  int grid = 64;           // grid x grid cells in (theta, phi) on the half-sphere
  int refine_iters = 200;  // Nelder-Mead iterations per candidate
  int candidates = 4;      // best distinct grid cells refined
};

struct NearestResult {
  DegeneratePoint point;
  GCoords canonical;  // point.b after canonicalize_signs
  double distance = 0.0;
  int excluded_cells = 0;  // grid cells skipped near the ParallelToAnchor singularity
};

/// Closest element of the degenerate set to frame.g, in chordal distance on
/// the (g1,g2,g3,g4) sphere. The grid stage runs under OpenMP.
NearestResult nearest_degenerate(const GeodesicFrame& frame, const NearestOptions& opts = {},
                                 const Tolerances& tol = {});
/// Same search with a plain serial grid loop; kept as the reference.
NearestResult nearest_degenerate_serial(const GeodesicFrame& frame, const NearestOptions& opts = {},
                                        const Tolerances& tol = {});

/// Angle at which the geodesic through F and B meets the degenerate set.
/// F and B must be in the same (frame) basis. Throws InconsistentInputs.
double degeneracy_angle(const SymMatrix3& F, const DegeneratePoint& B);

}  // namespace tristate
