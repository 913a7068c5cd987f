#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "tristate/tolerances.hpp"

namespace tristate {

using Vec3 = std::array<double, 3>;

/// Row-major dense 3x3; used for change-of-basis rotations.
using Mat3 = std::array<std::array<double, 3>, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

/// Real symmetric 3x3 matrix stored as its six independent entries.
///
/// Off-diagonal slot k holds the entry that does not touch row/column k:
/// offdiag(0) = a(1,2), offdiag(1) = a(0,2), offdiag(2) = a(0,1). This lines
/// the slots up with the basis matrices Q1, Q2, Q3.
class SymMatrix3 {
 public:
  constexpr SymMatrix3() = default;

  static constexpr SymMatrix3 diagonal(double a00, double a11, double a22) {
    SymMatrix3 m;
    m.diag_ = {a00, a11, a22};
    return m;
  }
  static constexpr SymMatrix3 from_entries(double a00, double a11, double a22, double a12, double a02,
                                           double a01) {
    SymMatrix3 m;
    m.diag_ = {a00, a11, a22};
    m.off_ = {a12, a02, a01};
    return m;
  }
  static constexpr SymMatrix3 identity() { return diagonal(1.0, 1.0, 1.0); }
  /// n n^T
  static SymMatrix3 outer(const Vec3& n) {
    return from_entries(n[0] * n[0], n[1] * n[1], n[2] * n[2], n[1] * n[2], n[0] * n[2], n[0] * n[1]);
  }

  constexpr double diag(int i) const { return diag_[i]; }
  constexpr double offdiag(int k) const { return off_[k]; }
  constexpr double operator()(int i, int j) const { return i == j ? diag_[i] : off_[3 - i - j]; }

  constexpr double trace() const { return diag_[0] + diag_[1] + diag_[2]; }

  Vec3 apply(const Vec3& x) const {
    return {diag_[0] * x[0] + off_[2] * x[1] + off_[1] * x[2], off_[2] * x[0] + diag_[1] * x[1] + off_[0] * x[2],
            off_[1] * x[0] + off_[0] * x[1] + diag_[2] * x[2]};
  }
  /// <x|A|x>
  double quadratic(const Vec3& x) const { return dot(x, apply(x)); }

  Mat3 dense() const {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = (*this)(i, j);
    return m;
  }

  constexpr SymMatrix3& operator+=(const SymMatrix3& o) {
    for (int i = 0; i < 3; ++i) {
      diag_[i] += o.diag_[i];
      off_[i] += o.off_[i];
    }
    return *this;
  }
  constexpr SymMatrix3& operator-=(const SymMatrix3& o) {
    for (int i = 0; i < 3; ++i) {
      diag_[i] -= o.diag_[i];
      off_[i] -= o.off_[i];
    }
    return *this;
  }
  constexpr SymMatrix3& operator*=(double s) {
    for (int i = 0; i < 3; ++i) {
      diag_[i] *= s;
      off_[i] *= s;
    }
    return *this;
  }

  friend constexpr SymMatrix3 operator+(SymMatrix3 a, const SymMatrix3& b) { return a += b; }
  friend constexpr SymMatrix3 operator-(SymMatrix3 a, const SymMatrix3& b) { return a -= b; }
  friend constexpr SymMatrix3 operator*(SymMatrix3 a, double s) { return a *= s; }
  friend constexpr SymMatrix3 operator*(double s, SymMatrix3 a) { return a *= s; }
  friend constexpr SymMatrix3 operator/(SymMatrix3 a, double s) { return a *= 1.0 / s; }
  friend constexpr SymMatrix3 operator-(SymMatrix3 a) { return a *= -1.0; }
  friend constexpr bool operator==(const SymMatrix3&, const SymMatrix3&) = default;

 private:
  std::array<double, 3> diag_{};
  std::array<double, 3> off_{};
};

/// Tr(ab), the natural inner product on symmetric matrices.
double inner(const SymMatrix3& a, const SymMatrix3& b);
/// sqrt(inner(a, a)).
double frobenius(const SymMatrix3& a);

SymMatrix3 detrace(const SymMatrix3& a);
/// Throws ZeroMatrix when inner(a,a) <= tol.norm_floor.
SymMatrix3 normalize(const SymMatrix3& a, const Tolerances& tol = {});

bool is_traceless(const SymMatrix3& a, const Tolerances& tol = {});
bool is_unit(const SymMatrix3& a, const Tolerances& tol = {});

/// R^T A R. With R's columns an orthonormal basis this expresses A in that basis.
SymMatrix3 in_basis(const SymMatrix3& a, const Mat3& r);
/// R A R^T, the inverse of in_basis for orthogonal R.
SymMatrix3 from_basis(const SymMatrix3& a, const Mat3& r);
/// D A D with D = diag(signs).
SymMatrix3 conjugate_by_signs(const SymMatrix3& a, const std::array<int, 3>& signs);

// Orthonormal basis of traceless symmetric matrices.
namespace qbasis {
inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
inline constexpr double kInvSqrt6 = std::numbers::inv_sqrt3 / std::numbers::sqrt2;

inline constexpr SymMatrix3 Q0 = SymMatrix3::diagonal(2.0 * kInvSqrt6, -kInvSqrt6, -kInvSqrt6);
inline constexpr SymMatrix3 Q1 = SymMatrix3::from_entries(0, 0, 0, kInvSqrt2, 0, 0);
inline constexpr SymMatrix3 Q2 = SymMatrix3::from_entries(0, 0, 0, 0, kInvSqrt2, 0);
inline constexpr SymMatrix3 Q3 = SymMatrix3::from_entries(0, 0, 0, 0, 0, kInvSqrt2);
inline constexpr SymMatrix3 Q4 = SymMatrix3::diagonal(0.0, kInvSqrt2, -kInvSqrt2);

inline constexpr std::array<SymMatrix3, 5> kAll = {Q0, Q1, Q2, Q3, Q4};
}  // namespace qbasis

using QCoords = std::array<double, 5>;

/// x_alpha = inner(a, Q_alpha). Throws NotTraceless.
QCoords to_q_coords(const SymMatrix3& a, const Tolerances& tol = {});
SymMatrix3 from_q_coords(const QCoords& x);

/// Eigen-decomposition with eigenvalues in descending order.
struct Spectrum {
  std::array<double, 3> values{};
  /// vectors[i] is the unit eigenvector for values[i].
  std::array<Vec3, 3> vectors{};
  double gap12 = 0.0;
  double gap23 = 0.0;

  double min_gap() const { return gap12 < gap23 ? gap12 : gap23; }
  /// Columns are the eigenvectors; in_basis(a, rotation()) is diagonal.
  Mat3 rotation() const;
};

/// Closed-form eigensolver for symmetric 3x3 input, with a cyclic Jacobi
/// fallback when the spectrum is nearly scalar.
///
/// Each eigenvector is sign-fixed so its largest-magnitude component is
/// positive (ties within 1e-12 go to the lowest index). Inside a degenerate
/// eigenspace any orthonormal basis may be returned; the gaps report it.
Spectrum eig(const SymMatrix3& a);

/// Cyclic Jacobi rotations; slower, kept as the fallback and as a test oracle.
Spectrum eig_jacobi(const SymMatrix3& a);

/// Eigenvalue angle psi in [0, pi/3] with l1 = sqrt(2/3) cos(psi).
/// Requires a traceless unit-norm input (NotTraceless / NotNormalized).
double psi_of(const SymMatrix3& a, const Tolerances& tol = {});

/// psi_1 = psi, psi_2 = psi - 2pi/3, psi_3 = psi + 2pi/3.
inline std::array<double, 3> psi_angles(double psi) {
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  return {psi, psi - third, psi + third};
}

/// cos(psi) Q0 + sin(psi) Q4: the diagonal anchor with eigenvalue angle psi.
SymMatrix3 diagonal_anchor(double psi);
/// -sin(psi) Q0 + cos(psi) Q4: the diagonal direction orthogonal to the anchor.
SymMatrix3 companion(double psi);

}  // namespace tristate
