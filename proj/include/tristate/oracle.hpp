#pragma once

#include <array>
#include <span>
#include <vector>

#include "tristate/symmat.hpp"

namespace tristate {

/// cos(theta) F + sin(theta) G.
SymMatrix3 h_of_theta(const SymMatrix3& F, const SymMatrix3& G, double theta);

struct ContinuationOptions {
  int steps = 4096;
  int max_refine = 6;
  double gap_floor = 1e-5;
  double odef_tol = 1e-6;
};

struct ContinuationResult {
  std::array<int, 3> gamma{1, 1, 1};
  double min_gap = 0.0;
  double min_gap_theta = 0.0;
  int steps = 0;
  /// max over steps of 1 - |overlap of consecutive eigenvectors|, including
  /// the closing overlap at theta = 2 pi.
  double overlap_defect = 0.0;
  bool reliable = false;
};

/// Diagonalize H(theta) on a uniform grid, align each eigenvector's sign with
/// the previous step, and read gamma_i off the closing overlap. The grid is
/// doubled while the overlap defect exceeds odef_tol.
ContinuationResult continuation(const SymMatrix3& F, const SymMatrix3& G, const ContinuationOptions& opts = {});

/// Eigenvectors of H(theta) connected continuously to eig(F) at theta = 0.
struct TransportedFrame {
  double theta = 0.0;
  std::array<Vec3, 3> vectors{};
};

struct TransportResult {
  std::vector<TransportedFrame> frames;  // one per requested theta, same order
  double overlap_defect = 0.0;
  bool reliable = false;
};

/// Transport along increasing targets in [0, 2 pi] (sorted on entry), with
/// step size at most 2 pi / opts.steps; each target is hit exactly.
TransportResult transport(const SymMatrix3& F, const SymMatrix3& G, std::span<const double> thetas,
                          const ContinuationOptions& opts = {});

TransportedFrame transported_frame(const SymMatrix3& F, const SymMatrix3& G, double theta,
                                   const ContinuationOptions& opts = {});

}  // namespace tristate
