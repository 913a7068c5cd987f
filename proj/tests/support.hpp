#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "tristate/frame.hpp"
#include "tristate/symmat.hpp"

namespace tristate::testing {

inline constexpr double kPi = std::numbers::pi;

inline SymMatrix3 random_symmetric(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return SymMatrix3::from_entries(n(rng), n(rng), n(rng), n(rng), n(rng), n(rng));
}

inline SymMatrix3 random_traceless_unit(std::mt19937_64& rng) { return normalize(detrace(random_symmetric(rng))); }

inline Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vec3 v{n(rng), n(rng), n(rng)};
  return scaled(v, 1.0 / norm(v));
}

inline GCoords random_s3(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  GCoords g{n(rng), n(rng), n(rng), n(rng)};
  const double s = g.norm();
  return {g.g1 / s, g.g2 / s, g.g3 / s, g.g4 / s};
}

inline Mat3 random_rotation(std::mt19937_64& rng) {
  // Gram-Schmidt on a Gaussian matrix.
  const Vec3 a = random_unit(rng);
  Vec3 b = random_unit(rng);
  b = {b[0] - dot(a, b) * a[0], b[1] - dot(a, b) * a[1], b[2] - dot(a, b) * a[2]};
  b = scaled(b, 1.0 / norm(b));
  const Vec3 c = cross(a, b);
  return Mat3{{{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {a[2], b[2], c[2]}}};
}

/// max |A - V diag(l) V^T| over entries.
inline double reconstruction_residual(const SymMatrix3& a, const Spectrum& s) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double r = 0.0;
      for (int k = 0; k < 3; ++k) r += s.vectors[k][i] * s.values[k] * s.vectors[k][j];
      worst = std::max(worst, std::abs(a(i, j) - r));
    }
  return worst;
}

inline double orthogonality_defect(const std::array<Vec3, 3>& v) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(dot(v[i], v[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

inline double max_abs_diff(const SymMatrix3& a, const SymMatrix3& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace tristate::testing
