#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tristate/classifier.hpp"
#include "tristate/degeneracy.hpp"
#include "tristate/error.hpp"
#include "tristate/oracle.hpp"

using namespace tristate;
using namespace tristate::testing;

namespace {

struct Draw {
  Branch branch;
  Vec3 n;
  double psi;
};

// Random preimage with 1 - c^2 bounded away from zero.
Draw random_draw(std::mt19937_64& rng, double min_denominator = 1e-3) {
  std::uniform_real_distribution<double> ups(0.02, kPi / 3 - 0.02);
  std::bernoulli_distribution coin;
  for (;;) {
    Draw d{coin(rng) ? Branch::Plus : Branch::Minus, random_unit(rng), ups(rng)};
    const auto ang = psi_angles(d.psi);
    double c = 0;
    for (int i = 0; i < 3; ++i) c += std::cos(ang[i]) * d.n[i] * d.n[i];
    if (1 - c * c > min_denominator) return d;
  }
}

}  // namespace

TEST_CASE("d_point") {
  CHECK(max_abs_diff(d_point(Branch::Plus, {1, 0, 0}), SymMatrix3::diagonal(-2, 1, 1) * qbasis::kInvSqrt6) < 1e-15);
  // -(1/sqrt 6)(1 - 3 e3 e3^T): the single eigenvalue sits on top, lambda2 = lambda3.
  CHECK(max_abs_diff(d_point(Branch::Minus, {0, 0, 1}), SymMatrix3::diagonal(-1, -1, 2) * qbasis::kInvSqrt6) < 1e-15);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const Vec3 n = random_unit(rng);
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const SymMatrix3 d = d_point(b, n);
      CHECK(max_abs_diff(d, d_point(b, scaled(n, -1.0))) == 0.0);
      CHECK(is_traceless(d));
      CHECK(is_unit(d));
      const Spectrum s = eig(d);
      if (b == Branch::Plus) {
        CHECK(s.gap12 < 1e-12);
        CHECK(s.gap23 > 0.1);
        CHECK(psi_of(d, Tolerances{.psi = 0}) == doctest::Approx(kPi / 3));
      } else {
        CHECK(s.gap23 < 1e-12);
        CHECK(s.gap12 > 0.1);
        CHECK(std::abs(psi_of(d, Tolerances{.psi = 0})) < 1e-7);
      }
    }
  }
}

TEST_CASE("b_point: worked example gives -+Q1") {
  const Vec3 n{0, 1 / std::sqrt(3.0), std::sqrt(2.0 / 3.0)};
  const DegeneratePoint p = b_point(Branch::Plus, n, kPi / 6);
  CHECK(p.b.g1 == doctest::Approx(-1.0));
  CHECK(std::abs(p.b.g2) < 1e-15);
  CHECK(std::abs(p.b.g3) < 1e-15);
  CHECK(std::abs(p.b.g4) < 1e-15);
  CHECK(std::abs(p.s) < 1e-15);
  CHECK(p.c == doctest::Approx(-1 / std::sqrt(3.0)));
  CHECK(max_abs_diff(p.matrix, -1.0 * qbasis::Q1) < 1e-14);
  const DegeneratePoint m = b_point(Branch::Minus, n, kPi / 6);
  CHECK(max_abs_diff(m.matrix, qbasis::Q1) < 1e-14);
}

TEST_CASE("b_point: one nonzero pair product leaves one nonzero b") {
  const DegeneratePoint p = b_point(Branch::Minus, {0.6, 0.8, 0}, 0.4);
  CHECK(p.b.g1 == 0.0);
  CHECK(p.b.g2 == 0.0);
  CHECK(p.b.g3 != 0.0);
}

TEST_CASE("b_point: errors") {
  CHECK_THROWS_AS(b_point(Branch::Plus, {1, 1, 0}, 0.4), Error);
  // At psi = 0, n = e1 puts D^- on F itself: c = 1.
  try {
    b_point(Branch::Minus, {1, 0, 0}, 0.0);
    FAIL("expected ParallelToAnchor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParallelToAnchor);
  }
}

TEST_CASE("b_point agrees with a direct projection of D into F's equator") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const Draw d = random_draw(rng);
    const DegeneratePoint p = b_point(d.branch, d.n, d.psi);
    const SymMatrix3 F = diagonal_anchor(d.psi);
    const SymMatrix3 D = d_point(d.branch, d.n);
    const SymMatrix3 proj = normalize(D - inner(D, F) * F);
    CHECK(max_abs_diff(p.matrix, proj) < 1e-10);
    CHECK(std::abs(p.b.norm() - 1.0) < 1e-10);
    CHECK(std::abs(inner(p.matrix, F)) < 1e-10);
  }
}

TEST_CASE("b_point triangle image lies on the ellipse") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const Draw d = random_draw(rng);
    const DegeneratePoint p = b_point(d.branch, d.n, d.psi);
    if (std::abs(p.b.g4) < 1e-3) continue;  // ellipse collapses to the segment
    const auto v = v_coords(p.b.g1, p.b.g2, p.b.g3);
    const Point2 x = cs_coords(v, d.psi);
    CHECK(std::abs(x.C * x.C + x.S * x.S / (p.b.g4 * p.b.g4) - 1.0) < 1e-10);
    // and on the active half: S has the opposite sign to the canonical g4.
    const GCoords c = canonicalize_signs(p.b).first;
    if (c.g1 * c.g2 * c.g3 != 0.0) CHECK(x.S * c.g4 <= 1e-12);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("geodesics through b_point are physically degenerate at degeneracy_angle") {
  std::mt19937_64 rng(4);
  ContinuationOptions o;
  o.steps = 1024;
  for (int t = 0; t < 100; ++t) {
    const Draw d = random_draw(rng, 1e-2);
    const DegeneratePoint p = b_point(d.branch, d.n, d.psi);
    const SymMatrix3 F = diagonal_anchor(d.psi);
    const double theta = degeneracy_angle(F, p);
    CHECK(eig(h_of_theta(F, p.matrix, theta)).min_gap() < 1e-8);
    const ContinuationResult r = continuation(F, p.matrix, o);
    CHECK(r.min_gap < 1e-6);
    // -D at theta + pi is degenerate too, so either crossing may win.
    const double at = std::remainder(r.min_gap_theta - theta, kPi);
    CHECK(std::abs(at) < 2 * kPi / o.steps);
  }
}

TEST_CASE("degeneracy_angle examples") {
  // inner(D, F) = -+c, so with s = 0 and c < 0 the minus branch meets D past pi/2.
  const SymMatrix3 F = diagonal_anchor(kPi / 6);
  const Vec3 n{0, 1 / std::sqrt(3.0), std::sqrt(2.0 / 3.0)};
  const double th = degeneracy_angle(F, b_point(Branch::Minus, n, kPi / 6));
  CHECK(th > kPi / 2);
  CHECK(th < kPi);
  const double tp = degeneracy_angle(F, b_point(Branch::Plus, n, kPi / 6));
  CHECK(tp > 0);
  CHECK(tp < kPi / 2);

  // c = 0: n^2 are the barycentric weights of a point with C = 0.
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const Draw d = random_draw(rng);
    const auto w = barycentric({0.0, 0.1}, d.psi);
    if (*std::min_element(w.begin(), w.end()) < 0) continue;
    const Vec3 m{std::sqrt(w[0]), std::sqrt(w[1]), std::sqrt(w[2])};
    const DegeneratePoint p = b_point(d.branch, m, d.psi);
    CHECK(std::abs(p.c) < 1e-12);
    CHECK(std::abs(std::abs(degeneracy_angle(diagonal_anchor(d.psi), p)) - kPi / 2) < 1e-10);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("degeneracy_angle rejects a B built for another anchor") {
  const DegeneratePoint p = b_point(Branch::Plus, {0.3, 0.4, std::sqrt(0.75)}, 0.4);
  CHECK_THROWS_AS(degeneracy_angle(diagonal_anchor(0.7), p), Error);
}

TEST_CASE("nearest_degenerate recovers its own points") {
  std::mt19937_64 rng(6);
  NearestOptions o;
  o.grid = 32;
  for (int t = 0; t < 50; ++t) {
    const Draw d = random_draw(rng, 0.05);
    const DegeneratePoint p = b_point(d.branch, d.n, d.psi);
    if (std::abs(p.b.g1) < 1e-3 || std::abs(p.b.g2) < 1e-3 || std::abs(p.b.g3) < 1e-3) continue;
    const GeodesicFrame f = frame_from_coords(d.psi, p.b);
    const NearestResult r = nearest_degenerate(f, o);
    CHECK(r.distance < 1e-8);
    // the frame chart may have flipped signs; the point found must equal f.g
    CHECK(std::abs(r.point.b.g1 - f.g.g1) < 1e-7);
    CHECK(std::abs(r.point.b.g4 - f.g.g4) < 1e-7);
    // the D point is the same matrix up to the sign flips, so the spectra agree
    CHECK(std::abs(std::abs(r.point.n[0]) - std::abs(p.n[0])) < 1e-6);
  }
}

TEST_CASE("nearest_degenerate is locally Lipschitz") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    const Draw d = random_draw(rng, 0.1);
    const Vec3 m = random_unit(rng);
    Vec3 n2{d.n[0] + 1e-3 * m[0], d.n[1] + 1e-3 * m[1], d.n[2] + 1e-3 * m[2]};
    n2 = scaled(n2, 1.0 / norm(n2));
    const GCoords a = b_point(d.branch, d.n, d.psi).b;
    const GCoords b = b_point(d.branch, n2, d.psi).b;
    const GCoords diff{a.g1 - b.g1, a.g2 - b.g2, a.g3 - b.g3, a.g4 - b.g4};
    CHECK(diff.norm() < 5e-3);
    // A point 1e-3 off the degenerate set is found within that distance.
    GCoords g{a.g1 + 1e-3 * nd(rng) / 2, a.g2 + 1e-3 * nd(rng) / 2, a.g3 + 1e-3 * nd(rng) / 2,
              a.g4 + 1e-3 * nd(rng) / 2};
    const double s = g.norm();
    g = {g.g1 / s, g.g2 / s, g.g3 / s, g.g4 / s};
    CHECK(nearest_degenerate(frame_from_coords(d.psi, g), {.grid = 32}).distance < 5e-3);
  }
}

TEST_CASE("nearest_degenerate: Lauber example") {
  const double psi = std::acos(23.0 / 26.0);
  const double s = std::hypot(0.101, 0.995);
  const GeodesicFrame f = frame_from_coords(psi, {0.995 / s, 0.101 / s, 0, 0});
  const NearestResult r = nearest_degenerate(f);
  CHECK(r.distance >= 0.03);
  CHECK(r.distance <= 0.09);
  CHECK(r.canonical.g1 == doctest::Approx(0.997).epsilon(0.01));
  CHECK(std::abs(r.canonical.g2 - 0.066) < 0.005);
  CHECK(std::abs(r.canonical.g3 - 0.048) < 0.005);
  CHECK(std::abs(r.canonical.g4 + 0.003) < 0.005);
}

TEST_CASE("nearest_degenerate: parallel grid matches the serial reference") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    std::uniform_real_distribution<double> ups(0.05, kPi / 3 - 0.05);
    const GeodesicFrame f = frame_from_coords(ups(rng), random_s3(rng));
    const NearestResult a = nearest_degenerate(f), b = nearest_degenerate_serial(f);
    CHECK(a.distance == b.distance);
    CHECK(a.point.b == b.point.b);
    CHECK(a.excluded_cells == b.excluded_cells);
  }
}
