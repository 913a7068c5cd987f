#include "tristate/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tristate/error.hpp"

namespace tristate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::NotTraceless: return "NotTraceless";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::DegeneratePerturbation: return "DegeneratePerturbation";
    case ErrorCode::CollinearPerturbations: return "CollinearPerturbations";
    case ErrorCode::DegenerateAnchor: return "DegenerateAnchor";
    case ErrorCode::ExcludedPoint: return "ExcludedPoint";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParallelToAnchor: return "ParallelToAnchor";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
    case ErrorCode::SymmetryViolated: return "SymmetryViolated";
    case ErrorCode::InconsistentSigma: return "InconsistentSigma";
    case ErrorCode::UnreliableContinuation: return "UnreliableContinuation";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

double inner(const SymMatrix3& a, const SymMatrix3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += a.diag(i) * b.diag(i) + 2.0 * a.offdiag(i) * b.offdiag(i);
  return s;
}

double frobenius(const SymMatrix3& a) { return std::sqrt(inner(a, a)); }

SymMatrix3 detrace(const SymMatrix3& a) { return a - (a.trace() / 3.0) * SymMatrix3::identity(); }

SymMatrix3 normalize(const SymMatrix3& a, const Tolerances& tol) {
  const double nn = inner(a, a);
  if (!(nn > tol.norm_floor)) throw Error(ErrorCode::ZeroMatrix, "cannot normalize a zero matrix");
  return a / std::sqrt(nn);
}

bool is_traceless(const SymMatrix3& a, const Tolerances& tol) { return std::abs(a.trace()) <= tol.traceless; }

bool is_unit(const SymMatrix3& a, const Tolerances& tol) { return std::abs(inner(a, a) - 1.0) <= tol.unit_norm; }

SymMatrix3 in_basis(const SymMatrix3& a, const Mat3& r) {
  // (R^T A R)_{ij} = col_i^T A col_j
  std::array<Vec3, 3> col;
  for (int j = 0; j < 3; ++j) col[j] = {r[0][j], r[1][j], r[2][j]};
  std::array<Vec3, 3> acol;
  for (int j = 0; j < 3; ++j) acol[j] = a.apply(col[j]);
  return SymMatrix3::from_entries(dot(col[0], acol[0]), dot(col[1], acol[1]), dot(col[2], acol[2]),
                                  dot(col[1], acol[2]), dot(col[0], acol[2]), dot(col[0], acol[1]));
}

SymMatrix3 from_basis(const SymMatrix3& a, const Mat3& r) {
  Mat3 rt{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rt[i][j] = r[j][i];
  return in_basis(a, rt);
}

SymMatrix3 conjugate_by_signs(const SymMatrix3& a, const std::array<int, 3>& s) {
  return SymMatrix3::from_entries(a.diag(0), a.diag(1), a.diag(2), s[1] * s[2] * a.offdiag(0),
                                  s[0] * s[2] * a.offdiag(1), s[0] * s[1] * a.offdiag(2));
}

QCoords to_q_coords(const SymMatrix3& a, const Tolerances& tol) {
  if (!is_traceless(a, tol)) throw Error(ErrorCode::NotTraceless, "trace = " + std::to_string(a.trace()));
  QCoords x{};
  for (int k = 0; k < 5; ++k) x[k] = inner(a, qbasis::kAll[k]);
  return x;
}

SymMatrix3 from_q_coords(const QCoords& x) {
  SymMatrix3 m;
  for (int k = 0; k < 5; ++k) m += x[k] * qbasis::kAll[k];
  return m;
}

Mat3 Spectrum::rotation() const {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = vectors[j][i];
  return r;
}

namespace {

void fix_sign(Vec3& v) {
  const double a0 = std::abs(v[0]), a1 = std::abs(v[1]), a2 = std::abs(v[2]);
  const double big = std::max({a0, a1, a2}) - 1e-12;
  const int i = a0 >= big ? 0 : a1 >= big ? 1 : 2;
  if (v[i] < 0) v = scaled(v, -1.0);
}

Vec3 unit(const Vec3& v) { return scaled(v, 1.0 / norm(v)); }

// Null vector of (A - lambda I) for a simple eigenvalue: the largest cross
// product of two rows.
Vec3 null_vector(const SymMatrix3& a, double lambda) {
  const SymMatrix3 m = a - lambda * SymMatrix3::identity();
  const Vec3 r0{m(0, 0), m(0, 1), m(0, 2)};
  const Vec3 r1{m(1, 0), m(1, 1), m(1, 2)};
  const Vec3 r2{m(2, 0), m(2, 1), m(2, 2)};
  const std::array<Vec3, 3> c{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
  int best = 0;
  double bn = dot(c[0], c[0]);
  for (int k = 1; k < 3; ++k) {
    const double n = dot(c[k], c[k]);
    if (n > bn) {
      bn = n;
      best = k;
    }
  }
  return unit(c[best]);
}

// Two unit vectors completing w to a right-handed orthonormal basis.
std::pair<Vec3, Vec3> complement(const Vec3& w) {
  Vec3 u;
  if (std::abs(w[0]) > std::abs(w[1])) {
    u = unit(Vec3{-w[2], 0.0, w[0]});
  } else {
    u = unit(Vec3{0.0, w[2], -w[1]});
  }
  return {u, cross(w, u)};
}

Spectrum finish(std::array<double, 3> values, std::array<Vec3, 3> vectors, double scale) {
  std::array<int, 3> order{0, 1, 2};
  auto keep = [&](int a, int b) {
    if (values[order[a]] < values[order[b]]) std::swap(order[a], order[b]);
  };
  keep(0, 1);
  keep(1, 2);
  keep(0, 1);
  Spectrum s;
  for (int k = 0; k < 3; ++k) {
    s.values[k] = values[order[k]] * scale;
    s.vectors[k] = vectors[order[k]];
    fix_sign(s.vectors[k]);
  }
  s.gap12 = s.values[0] - s.values[1];
  s.gap23 = s.values[1] - s.values[2];
  return s;
}

Spectrum jacobi_scaled(const SymMatrix3& b, double scale) {
  Mat3 a = b.dense();
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if (off < 1e-36) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::array<Vec3, 3> vec;
  for (int j = 0; j < 3; ++j) vec[j] = {v[0][j], v[1][j], v[2][j]};
  return finish({a[0][0], a[1][1], a[2][2]}, vec, scale);
}

double max_abs_entry(const SymMatrix3& a) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s = std::max({s, std::abs(a.diag(i)), std::abs(a.offdiag(i))});
  return s;
}

}  // namespace

Spectrum eig_jacobi(const SymMatrix3& a) {
  const double scale = max_abs_entry(a);
  if (scale == 0.0) return finish({0, 0, 0}, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, 1.0);
  return jacobi_scaled(a / scale, scale);
}

Spectrum eig(const SymMatrix3& a) {
  const double scale = max_abs_entry(a);
  if (scale == 0.0) return finish({0, 0, 0}, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, 1.0);
  const SymMatrix3 b = a / scale;

  const double q = b.trace() / 3.0;
  const SymMatrix3 shifted = b - q * SymMatrix3::identity();
  const double p = std::sqrt(inner(shifted, shifted) / 6.0);
  // Nearly scalar: the trigonometric route cannot isolate an eigenvalue.
  if (p < 1e-6) return jacobi_scaled(b, scale);

  const SymMatrix3& c = shifted;
  const double det = c.diag(0) * (c.diag(1) * c.diag(2) - c.offdiag(0) * c.offdiag(0)) -
                     c.offdiag(2) * (c.offdiag(2) * c.diag(2) - c.offdiag(0) * c.offdiag(1)) +
                     c.offdiag(1) * (c.offdiag(2) * c.offdiag(0) - c.diag(1) * c.offdiag(1));
  const double r = std::clamp(det / (2.0 * p * p * p), -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double l1 = q + 2.0 * p * cp;
  const double l3 = q - p * (cp + std::numbers::sqrt3 * sp);  // cos(phi + 2 pi / 3)
  const double l2 = 3.0 * q - l1 - l3;

  // The eigenvalue farther from the middle one is separated by at least half
  // the spread, so its null vector is well conditioned. The remaining pair is
  // resolved exactly inside the orthogonal complement.
  const bool top_isolated = (l1 - l2) >= (l2 - l3);
  const Vec3 w = null_vector(b, top_isolated ? l1 : l3);
  const auto [u, v] = complement(w);
  const Vec3 bu = b.apply(u), bv = b.apply(v);
  const double m00 = dot(u, bu), m01 = dot(u, bv), m11 = dot(v, bv);

  const double mean = 0.5 * (m00 + m11);
  const double half = 0.5 * (m00 - m11);
  // b is scaled to unit max entry, so plain sqrt cannot overflow here.
  const double rad = std::sqrt(half * half + m01 * m01);
  const double mu1 = mean + rad, mu2 = mean - rad;
  double x, y;
  if (m00 >= m11) {
    x = mu1 - m11;
    y = m01;
  } else {
    x = m01;
    y = mu1 - m00;
  }
  const double xy = std::sqrt(x * x + y * y);
  if (xy > 0.0) {
    x /= xy;
    y /= xy;
  } else {
    x = 1.0;
    y = 0.0;
  }
  const Vec3 e1{x * u[0] + y * v[0], x * u[1] + y * v[1], x * u[2] + y * v[2]};
  const Vec3 e2{-y * u[0] + x * v[0], -y * u[1] + x * v[1], -y * u[2] + x * v[2]};

  return finish({b.quadratic(w), mu1, mu2}, {w, e1, e2}, scale);
}

double psi_of(const SymMatrix3& a, const Tolerances& tol) {
  if (!is_traceless(a, tol)) throw Error(ErrorCode::NotTraceless, "psi_of needs a traceless matrix");
  if (!is_unit(a, tol)) throw Error(ErrorCode::NotNormalized, "psi_of needs a unit-norm matrix");
  const Spectrum s = eig(a);
  // l1 = sqrt(2/3) cos psi and l2 - l3 = sqrt(2) sin psi
  const double cos_part = s.values[0] * std::sqrt(1.5);
  const double sin_part = (s.values[1] - s.values[2]) / std::numbers::sqrt2;
  const double psi = std::clamp(std::atan2(sin_part, cos_part), 0.0, std::numbers::pi / 3.0);
  const double l2 = std::sqrt(2.0 / 3.0) * std::cos(psi - 2.0 * std::numbers::pi / 3.0);
  if (std::abs(l2 - s.values[1]) > 1e-8)
    throw Error(ErrorCode::NotNormalized, "eigenvalues inconsistent with a unit traceless spectrum");
  return psi;
}

SymMatrix3 diagonal_anchor(double psi) { return std::cos(psi) * qbasis::Q0 + std::sin(psi) * qbasis::Q4; }

SymMatrix3 companion(double psi) { return -std::sin(psi) * qbasis::Q0 + std::cos(psi) * qbasis::Q4; }

}  // namespace tristate
