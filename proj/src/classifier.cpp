#include "tristate/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tristate/error.hpp"

namespace tristate {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::Boundary: return "Boundary";
    case Region::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(SpecialCase s) {
  switch (s) {
    case SpecialCase::None: return "none";
    case SpecialCase::CommonEigenvector: return "commonEigenvector";
    case SpecialCase::VanishingPair: return "vanishingPair";
    case SpecialCase::FullyDiagonal: return "fullyDiagonal";
  }
  return "?";
}

std::string_view to_string(ArcShape s) {
  switch (s) {
    case ArcShape::Ellipse: return "ellipse";
    case ArcShape::Segment: return "segment";
    case ArcShape::Circle: return "circle";
  }
  return "?";
}

std::array<double, 3> v_coords(double g1, double g2, double g3, const Tolerances& tol) {
  const int vanishing = (std::abs(g1) < tol.zero) + (std::abs(g2) < tol.zero) + (std::abs(g3) < tol.zero);
  if (vanishing >= 2) throw Error(ErrorCode::ExcludedPoint, "two or more of (g1,g2,g3) vanish");
  const double a1 = g1 * g1, a2 = g2 * g2, a3 = g3 * g3;
  const double A = 1.0 / (a1 * a2 + a2 * a3 + a1 * a3);
  return {A * a2 * a3, A * a3 * a1, A * a1 * a2};
}

Point2 cs_coords(const std::array<double, 3>& v, double psi) {
  const auto ang = psi_angles(psi);
  Point2 p;
  for (int i = 0; i < 3; ++i) {
    p.C += v[i] * std::cos(ang[i]);
    p.S += v[i] * std::sin(ang[i]);
  }
  return p;
}

std::array<Point2, 3> triangle_vertices(double psi) {
  const auto ang = psi_angles(psi);
  return {Point2{std::cos(ang[0]), std::sin(ang[0])}, Point2{std::cos(ang[1]), std::sin(ang[1])},
          Point2{std::cos(ang[2]), std::sin(ang[2])}};
}

std::array<double, 3> barycentric(const Point2& p, double psi) {
  const auto t = triangle_vertices(psi);
  const double det = (t[1].S - t[2].S) * (t[0].C - t[2].C) + (t[2].C - t[1].C) * (t[0].S - t[2].S);
  const double w0 = ((t[1].S - t[2].S) * (p.C - t[2].C) + (t[2].C - t[1].C) * (p.S - t[2].S)) / det;
  const double w1 = ((t[2].S - t[0].S) * (p.C - t[2].C) + (t[0].C - t[2].C) * (p.S - t[2].S)) / det;
  return {w0, w1, 1.0 - w0 - w1};
}

double g4_critical(double psi) {
  if (!(psi > 0.0 && psi < std::numbers::pi / 3.0))
    throw Error(ErrorCode::DomainError, "g4_critical needs psi in (0, pi/3), got " + std::to_string(psi));
  const double s = std::sin(psi + std::numbers::pi / 3.0);
  return -std::sqrt(std::max(0.0, 1.0 - 0.75 / (s * s)));
}

namespace {

constexpr double kInside = 1e-12;

bool inside(const Point2& p, double psi) {
  const auto w = barycentric(p, psi);
  return w[0] >= -kInside && w[1] >= -kInside && w[2] >= -kInside;
}

Point2 on_ellipse(double t, double minor) { return {std::cos(t), minor * std::sin(t)}; }

double dist(const Point2& a, const Point2& b) { return std::hypot(a.C - b.C, a.S - b.S); }

template <class F>
double golden_min(F&& f, double lo, double hi, int iters) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

double distance_to_degenerate_arc(const Point2& p, double psi, double g4, const Tolerances& tol) {
  if (std::abs(g4) <= tol.zero) {
    // Both halves collapse onto the segment S = 0 inside the triangle.
    return std::abs(p.S);
  }
  const double minor = std::abs(g4);
  // g4 > 0: lower half, t in (-pi, 0); g4 < 0: upper half, t in (0, pi).
  const double t0 = g4 > 0 ? -std::numbers::pi : 0.0;
  constexpr int kSamples = 1024;
  const double dt = std::numbers::pi / kSamples;
  double best = std::numeric_limits<double>::infinity();
  int best_k = -1;
  for (int k = 0; k <= kSamples; ++k) {
    const Point2 q = on_ellipse(t0 + k * dt, minor);
    if (!inside(q, psi)) continue;
    const double d = dist(p, q);
    if (d < best) {
      best = d;
      best_k = k;
    }
  }
  if (best_k < 0) return best;
  const double lo = t0 + std::max(0, best_k - 1) * dt;
  const double hi = t0 + std::min(kSamples, best_k + 1) * dt;
  const double t = golden_min([&](double s) { return dist(p, on_ellipse(s, minor)); }, lo, hi, 60);
  const Point2 q = on_ellipse(t, minor);
  if (inside(q, psi)) best = std::min(best, dist(p, q));
  return best;
}

RegionResult classify(const GeodesicFrame& frame, const Tolerances& tol) {
  const GCoords& g = frame.g;
  RegionResult res;
  const bool z1 = std::abs(g.g1) < tol.zero, z2 = std::abs(g.g2) < tol.zero, z3 = std::abs(g.g3) < tol.zero;

  if (z1 && z2 && z3) {
    res.region = Region::Degenerate;
    res.special = SpecialCase::FullyDiagonal;
    return res;
  }
  if ((z1 && z2) || (z2 && z3)) {
    res.region = Region::Degenerate;
    res.special = SpecialCase::VanishingPair;
    return res;
  }
  if (z1 && z3) {
    // F and G share the eigenvector (0,1,0).
    const double crit = g4_critical(frame.psi);
    res.special = SpecialCase::CommonEigenvector;
    res.g4_critical = crit;
    if (g.g4 > crit + tol.boundary) {
      res.region = Region::R1;
      res.phase = -1;
    } else if (g.g4 < crit - tol.boundary) {
      res.region = Region::Degenerate;
    } else {
      res.region = Region::Boundary;
    }
    return res;
  }

  TrianglePoint tp;
  tp.v = v_coords(g.g1, g.g2, g.g3, tol);
  const Point2 p = cs_coords(tp.v, frame.psi);
  tp.C = p.C;
  tp.S = p.S;
  res.point = tp;
  res.distance_to_degenerate_arc = distance_to_degenerate_arc(p, frame.psi, g.g4, tol);
  for (const Point2& v : triangle_vertices(frame.psi))
    if (std::abs(v.C) > 1.0 - 1e-6) res.oracle_advised = true;

  if (std::abs(g.g4) < tol.zero) {
    if (p.S > tol.boundary) {
      res.region = Region::R1;
    } else if (p.S < -tol.boundary) {
      res.region = Region::R3;
    } else {
      res.region = Region::Boundary;
    }
  } else {
    const double u = p.C * p.C + p.S * p.S / (g.g4 * g.g4);
    res.u = u;
    if (u < 1.0 - tol.boundary) {
      res.region = Region::R2;
    } else if (u > 1.0 + tol.boundary) {
      res.region = p.S > 0 ? Region::R1 : Region::R3;
    } else {
      res.region = Region::Boundary;
    }
  }

  switch (res.region) {
    case Region::R1: res.phase = -1; break;
    case Region::R2: res.phase = g.g4 > 0 ? -1 : 1; break;
    case Region::R3: res.phase = 1; break;
    default: break;
  }
  return res;
}

ArcSet ellipse_arcs(double psi, double g4, int samples, const Tolerances& tol) {
  ArcSet set;
  const double minor = std::abs(g4);
  set.semi_minor = minor;
  set.upper.upper = true;
  set.lower.upper = false;
  if (minor <= tol.zero) {
    set.shape = ArcShape::Segment;
  } else if (minor >= 1.0 - tol.zero) {
    set.shape = ArcShape::Circle;
  }
  set.upper.degenerate = g4 < 0;
  set.lower.degenerate = g4 > 0;
  if (set.shape == ArcShape::Segment) {
    // One shared segment, degenerate on either reading.
    set.upper.degenerate = set.lower.degenerate = true;
  }

  auto trace = [&](Arc& arc, double t0, double t1) {
    std::vector<Point2> piece;
    for (int k = 0; k <= samples; ++k) {
      const double t = t0 + (t1 - t0) * k / samples;
      const Point2 q = on_ellipse(t, minor);
      if (inside(q, psi)) {
        piece.push_back(q);
      } else if (!piece.empty()) {
        arc.pieces.push_back(std::move(piece));
        piece.clear();
      }
    }
    if (!piece.empty()) arc.pieces.push_back(std::move(piece));
  };
  trace(set.upper, 0.0, std::numbers::pi);
  trace(set.lower, -std::numbers::pi, 0.0);
  return set;
}

}  // namespace tristate
