#pragma once

namespace tristate {

/// Numerical thresholds shared across modules. Every function that needs one
/// takes a `const Tolerances&` defaulting to these values; the CLI can
/// override them from the input document.
struct Tolerances {
  double norm_floor = 1e-24;     // inner(a,a) below this is a zero matrix
  double traceless = 1e-12;      // |Tr a| accepted as zero
  double unit_norm = 1e-10;      // |<a,a> - 1| accepted as normalized
  double degenerate_f = 1e-12;   // relative norm of detraced f
  double collinear = 1e-10;      // relative Gram-Schmidt residual of g
  double orthonormal = 1e-10;    // pair checks in build_frame
  double psi = 1e-6;             // anchor must satisfy psi in (psi, pi/3 - psi)
  double zero = 1e-9;            // "a component vanishes"
  double boundary = 1e-7;        // band around u = 1 (and S = 0)
  double parallel_anchor = 1e-12;// 1 - c^2 below this: D parallel to F
  double eig_tie = 1e-12;        // eigenvalue gap reported as degenerate
};

}  // namespace tristate
