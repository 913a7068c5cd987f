#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tristate/error.hpp"
#include "tristate/symmat.hpp"

using namespace tristate;
using namespace tristate::testing;
using namespace tristate::qbasis;

namespace {
const double kR2 = std::sqrt(2.0);
const SymMatrix3 kDiag101 = SymMatrix3::diagonal(1, 0, -1) / kR2;
}  // namespace

TEST_CASE("inner product on the Q basis") {
  CHECK(inner(Q0, Q0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(inner(Q1, Q2)) < 1e-15);
  CHECK(inner(kDiag101, Q4) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("Q basis Gram matrix is the identity and every element is traceless") {
  for (int a = 0; a < 5; ++a) {
    CHECK(std::abs(kAll[a].trace()) < 1e-15);
    for (int b = 0; b < 5; ++b) CHECK(std::abs(inner(kAll[a], kAll[b]) - (a == b ? 1.0 : 0.0)) <= 1e-15);
  }
}

TEST_CASE("detrace") {
  CHECK(detrace(SymMatrix3::identity()) == SymMatrix3{});
  CHECK(max_abs_diff(detrace(SymMatrix3::diagonal(3, 1, -1)), SymMatrix3::diagonal(2, 0, -2)) < 1e-15);
  const SymMatrix3 t = SymMatrix3::from_entries(1, 2, -3, 0.5, 0.25, -1);
  CHECK(max_abs_diff(detrace(t), t) < 1e-15);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) CHECK(std::abs(detrace(random_symmetric(rng)).trace()) <= 1e-14);
}

TEST_CASE("normalize") {
  CHECK(max_abs_diff(normalize(Q3), Q3) < 1e-15);
  CHECK(max_abs_diff(normalize(5.0 * Q3), Q3) < 1e-15);
  CHECK(max_abs_diff(normalize(SymMatrix3::diagonal(2, 0, -2)), kDiag101) < 1e-15);
  CHECK_THROWS_AS(normalize(SymMatrix3{}), Error);
  try {
    normalize(SymMatrix3::diagonal(1e-13, 0, 0));
    FAIL("expected ZeroMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroMatrix);
  }
}

TEST_CASE("Q coordinates") {
  const QCoords x = to_q_coords(Q2);
  for (int k = 0; k < 5; ++k) CHECK(x[k] == doctest::Approx(k == 2 ? 1.0 : 0.0));
  const QCoords y = to_q_coords(kDiag101);
  CHECK(y[0] == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(y[4] == doctest::Approx(0.5));
  CHECK(std::abs(y[1]) + std::abs(y[2]) + std::abs(y[3]) < 1e-15);
  for (double v : to_q_coords(SymMatrix3{})) CHECK(v == 0.0);
  CHECK(max_abs_diff(from_q_coords({1, 0, 0, 0, 0}), Q0) == 0.0);
  CHECK(max_abs_diff(from_q_coords({0, 0, 0, 0, 1}), Q4) == 0.0);
  try {
    (void)to_q_coords(SymMatrix3::identity());
    FAIL("expected NotTraceless");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTraceless);
  }

  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const SymMatrix3 a = detrace(random_symmetric(rng));
    CHECK(max_abs_diff(from_q_coords(to_q_coords(a)), a) <= 1e-12);
  }
}

TEST_CASE("eig on diagonal input returns the standard basis") {
  const Spectrum s = eig(kDiag101);
  CHECK(s.values[0] == doctest::Approx(1.0 / kR2));
  CHECK(std::abs(s.values[1]) < 1e-15);
  CHECK(s.values[2] == doctest::Approx(-1.0 / kR2));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK(s.vectors[i][k] == doctest::Approx(i == k ? 1.0 : 0.0));
}

TEST_CASE("eig of Q1 resolves the (2,3) block") {
  const Spectrum s = eig(Q1);
  CHECK(s.values[0] == doctest::Approx(1.0 / kR2));
  CHECK(std::abs(s.values[1]) < 1e-15);
  CHECK(s.values[2] == doctest::Approx(-1.0 / kR2));
  const std::array<Vec3, 3> expect{Vec3{0, 1 / kR2, 1 / kR2}, Vec3{1, 0, 0}, Vec3{0, 1 / kR2, -1 / kR2}};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK(s.vectors[i][k] == doctest::Approx(expect[i][k]).epsilon(1e-14));
}

TEST_CASE("eig sign convention: largest component positive") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1000; ++t) {
    const Spectrum s = eig(random_symmetric(rng));
    for (const Vec3& v : s.vectors) {
      int big = 0;
      for (int k = 1; k < 3; ++k)
        if (std::abs(v[k]) > std::abs(v[big]) + 1e-12) big = k;
      CHECK(v[big] > 0);
    }
  }
}

TEST_CASE("eig shift invariance") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const SymMatrix3 a = random_symmetric(rng);
    const Spectrum s = eig(a), shifted = eig(a + 2.5 * SymMatrix3::identity());
    for (int i = 0; i < 3; ++i) {
      CHECK(shifted.values[i] == doctest::Approx(s.values[i] + 2.5).epsilon(1e-12));
      CHECK(std::abs(dot(shifted.vectors[i], s.vectors[i])) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("eig invariants on 10^4 random matrices") {
  std::mt19937_64 rng(29);
  double worst_res = 0.0, worst_orth = 0.0;
  bool descending = true;
  for (int t = 0; t < 10000; ++t) {
    const SymMatrix3 a = random_traceless_unit(rng);
    const Spectrum s = eig(a);
    worst_res = std::max(worst_res, reconstruction_residual(a, s));
    worst_orth = std::max(worst_orth, orthogonality_defect(s.vectors));
    descending = descending && s.values[0] >= s.values[1] && s.values[1] >= s.values[2];
  }
  CHECK(worst_res <= 1e-10);
  CHECK(worst_orth <= 1e-12);
  CHECK(descending);
}

TEST_CASE("eig stays accurate at and near degeneracy") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 2000; ++t) {
    const Mat3 r = random_rotation(rng);
    const double split = std::pow(10.0, -static_cast<double>(t % 16));
    for (const SymMatrix3& d : {SymMatrix3::diagonal(1, 1 - split, -1), SymMatrix3::diagonal(1, -1 + split, -1),
                                SymMatrix3::diagonal(1, 1, 1 - split), SymMatrix3::diagonal(0.3, 0.3, 0.3)}) {
      const SymMatrix3 a = from_basis(d, r);
      const Spectrum s = eig(a);
      CHECK(reconstruction_residual(a, s) <= 1e-10);
      CHECK(orthogonality_defect(s.vectors) <= 1e-12);
      const Spectrum j = eig_jacobi(a);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(s.values[i] - j.values[i]) < 1e-12);
    }
  }
}

TEST_CASE("psi_of") {
  CHECK(std::abs(psi_of(Q0)) < 1e-12);
  CHECK(psi_of(kDiag101) == doctest::Approx(kPi / 6.0).epsilon(1e-12));
  CHECK(psi_of(-Q0) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(psi_of(2.0 * Q0), Error);
  CHECK_THROWS_AS(psi_of(Q0 + SymMatrix3::identity()), Error);

  std::mt19937_64 rng(37);
  for (int t = 0; t < 1000; ++t) {
    const Vec3 n = random_unit(rng);
    const SymMatrix3 proj = SymMatrix3::outer(n);
    const SymMatrix3 dplus = kInvSqrt6 * (SymMatrix3::identity() - 3.0 * proj);
    CHECK(std::abs(psi_of(dplus) - kPi / 3.0) <= 1e-10);
    CHECK(std::abs(psi_of(-dplus)) <= 1e-10);
  }
  for (int t = 0; t < 1000; ++t) {
    const double psi = std::uniform_real_distribution<double>(0.0, kPi / 3.0)(rng);
    const SymMatrix3 a = from_basis(diagonal_anchor(psi), random_rotation(rng));
    CHECK(psi_of(a) == doctest::Approx(psi).epsilon(1e-10));
  }
}

TEST_CASE("anchor and companion are orthonormal and diagonal") {
  for (double psi : {0.1, 0.5, 1.0}) {
    const SymMatrix3 F = diagonal_anchor(psi), E = companion(psi);
    CHECK(std::abs(inner(F, E)) < 1e-15);
    CHECK(inner(F, F) == doctest::Approx(1.0));
    CHECK(inner(E, E) == doctest::Approx(1.0));
    const auto ang = psi_angles(psi);
    for (int i = 0; i < 3; ++i) CHECK(F.diag(i) == doctest::Approx(std::sqrt(2.0 / 3.0) * std::cos(ang[i])));
  }
}
