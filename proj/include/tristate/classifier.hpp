#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tristate/frame.hpp"
#include "tristate/tolerances.hpp"

namespace tristate {

struct Point2 {
  double C = 0.0;
  double S = 0.0;
};

/// Weights (v1, v2, v3) on the simplex and their image in the C-S plane.
struct TrianglePoint {
  std::array<double, 3> v{};
  double C = 0.0;
  double S = 0.0;
};

enum class Region { R1, R2, R3, Boundary, Degenerate };
enum class SpecialCase { None, CommonEigenvector, VanishingPair, FullyDiagonal };

std::string_view to_string(Region r);
std::string_view to_string(SpecialCase s);

struct RegionResult {
  Region region = Region::Degenerate;
  std::optional<int> phase;  // +1 or -1 when region is R1/R2/R3
  SpecialCase special = SpecialCase::None;
  /// Triangle placement; absent for the special cases that bypass it.
  std::optional<TrianglePoint> point;
  /// C^2 + S^2 / g4^2; absent in special cases and when g4 vanishes.
  std::optional<double> u;
  /// Euclidean C-S distance to the active (degenerate) arc.
  std::optional<double> distance_to_degenerate_arc;
  /// Critical g4 for the common-eigenvector case.
  std::optional<double> g4_critical;
  /// Set when a vertex sits within 1e-6 of (+-1, 0), where the exterior
  /// components pinch together; the CLI confirms such verdicts with the oracle.
  bool oracle_advised = false;
};

/// v1 = A g2^2 g3^2, v2 = A g3^2 g1^2, v3 = A g1^2 g2^2 with A normalizing
/// the sum to one. Throws ExcludedPoint when two or more components vanish.
std::array<double, 3> v_coords(double g1, double g2, double g3, const Tolerances& tol = {});

/// C = sum v_i cos(psi_i), S = sum v_i sin(psi_i).
Point2 cs_coords(const std::array<double, 3>& v, double psi);

/// Vertices (cos psi_i, sin psi_i) of the triangle.
std::array<Point2, 3> triangle_vertices(double psi);

/// Barycentric weights of p relative to triangle_vertices(psi).
std::array<double, 3> barycentric(const Point2& p, double psi);

/// -[1 - 3/4 cosec^2(psi + pi/3)]^{1/2}; throws DomainError outside (0, pi/3).
double g4_critical(double psi);

/// Region and topological phase of bands 1 and 3 for the frame's geodesic.
RegionResult classify(const GeodesicFrame& frame, const Tolerances& tol = {});

enum class ArcShape { Ellipse, Segment, Circle };
std::string_view to_string(ArcShape s);

struct Arc {
  bool upper = true;
  bool degenerate = false;
  /// Polyline pieces of the arc lying inside the triangle.
  std::vector<std::vector<Point2>> pieces;
};

/// The ellipse C^2 + S^2/g4^2 = 1 split into its upper and lower halves,
/// clipped to the triangle. shape != Ellipse marks the degenerate limits
/// (|g4| <= zero: the segment S = 0; |g4| >= 1 - zero: the unit circle).
struct ArcSet {
  ArcShape shape = ArcShape::Ellipse;
  double semi_major = 1.0;  // along C
  double semi_minor = 0.0;  // along S, equals |g4|
  Arc upper;
  Arc lower;

  const Arc& active() const { return upper.degenerate ? upper : lower; }
};

ArcSet ellipse_arcs(double psi, double g4, int samples = 512, const Tolerances& tol = {});
inline ArcSet ellipse_arcs(const GeodesicFrame& frame, int samples = 512, const Tolerances& tol = {}) {
  return ellipse_arcs(frame.psi, frame.g.g4, samples, tol);
}

/// Distance from p to the active degenerate arc for the given g4 (dense
/// sampling with golden-section polish). Infinity if no part of the arc lies
/// in the triangle.
double distance_to_degenerate_arc(const Point2& p, double psi, double g4, const Tolerances& tol = {});

}  // namespace tristate
