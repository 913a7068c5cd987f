#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "tristate/symmat.hpp"
#include "tristate/tolerances.hpp"

namespace tristate {

/// Coordinates of G in the basis (Q1, Q2, Q3, E), stored in that order.
struct GCoords {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double g4 = 0.0;

  double norm() const;
  GCoords operator-() const { return {-g1, -g2, -g3, -g4}; }
  friend bool operator==(const GCoords&, const GCoords&) = default;
};

/// Phase-preserving transforms used to make g1, g2, g3 nonnegative. The pair
/// flips are pi rotations about a principal axis of F; Global is G -> -G.
enum class Flip { Global, Pair12, Pair23, Pair13 };

std::string_view to_string(Flip f);

struct OrthonormalPair {
  SymMatrix3 F;
  SymMatrix3 G;
};

/// Geodesic H(theta) = cos(theta) F + sin(theta) G in the eigenbasis of F,
/// with G's coordinates brought to canonical sign form.
struct GeodesicFrame {
  SymMatrix3 F;  // diagonal, descending
  SymMatrix3 G;  // canonical, frame basis
  SymMatrix3 E;
  double psi = 0.0;
  GCoords g;
  GCoords g_raw;  // before canonicalization
  /// Columns are the frame axes in input coordinates: F_frame = R^T F R and,
  /// up to the global flip, G_frame = R^T G R.
  Mat3 basis_rotation{};
  std::vector<Flip> applied_flips;

  bool global_flipped() const;
};

/// Detrace, normalize and Gram-Schmidt a raw perturbation pair.
/// Throws DegeneratePerturbation or CollinearPerturbations.
OrthonormalPair orthonormalize(const SymMatrix3& f, const SymMatrix3& g, const Tolerances& tol = {});

/// Diagonalize F, expand G in (E, Q1, Q2, Q3) and canonicalize signs.
/// Throws NotOrthonormal for an invalid pair and DegenerateAnchor when psi is
/// within tol.psi of 0 or pi/3.
GeodesicFrame build_frame(const SymMatrix3& F, const SymMatrix3& G, const Tolerances& tol = {});

/// Frame for an anchor already diagonal with angle psi and G given by its
/// coordinates (normalized first).
GeodesicFrame frame_from_coords(double psi, const GCoords& g, const Tolerances& tol = {});

/// Odd count of negatives among (g1,g2,g3): global flip first. Then pair
/// flips in the order (1,2), (2,3), (1,3).
std::pair<GCoords, std::vector<Flip>> canonicalize_signs(const GCoords& g);

/// g4 E + g1 Q1 + g2 Q2 + g3 Q3.
SymMatrix3 matrix_from_coords(const GCoords& g, double psi);

}  // namespace tristate
