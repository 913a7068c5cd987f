#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "tristate/oracle.hpp"

using namespace tristate;
using namespace tristate::testing;

namespace {

const SymMatrix3 kF = SymMatrix3::diagonal(1, 0, -1) * qbasis::kInvSqrt2;

std::pair<SymMatrix3, SymMatrix3> random_pair(std::mt19937_64& rng) {
  const OrthonormalPair p = orthonormalize(random_traceless_unit(rng), random_traceless_unit(rng));
  return {p.F, p.G};
}

}  // namespace

TEST_CASE("h_of_theta") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto [F, G] = random_pair(rng);
    CHECK(max_abs_diff(h_of_theta(F, G, 0.0), F) == 0.0);
    CHECK(max_abs_diff(h_of_theta(F, G, kPi), -1.0 * F) < 1e-15);
    const double th = 0.1 * t;
    const SymMatrix3 h = h_of_theta(F, G, th);
    CHECK(inner(h, h) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("continuation: worked R2 pairs") {
  REQUIRE(max_abs_diff(kF, diagonal_anchor(kPi / 6)) < 1e-15);
  const SymMatrix3 E = companion(kPi / 6);
  ContinuationOptions o;
  o.steps = 10000;
  const ContinuationResult plus = continuation(kF, 0.5 * (E + qbasis::Q1 + qbasis::Q2 + qbasis::Q3), o);
  CHECK(plus.reliable);
  CHECK(plus.gamma == std::array<int, 3>{-1, 1, -1});
  const ContinuationResult minus = continuation(kF, 0.5 * (-1.0 * E + qbasis::Q1 + qbasis::Q2 + qbasis::Q3), o);
  CHECK(minus.reliable);
  CHECK(minus.gamma == std::array<int, 3>{1, 1, 1});
}

TEST_CASE("continuation: geodesic through a degeneracy is flagged") {
  const ContinuationResult r = continuation(kF, qbasis::Q1);
  CHECK(!r.reliable);
  CHECK(r.min_gap < 1e-4);
}

TEST_CASE("continuation: reliable runs have the pattern gamma2 = +1, gamma1 = gamma3") {
  std::mt19937_64 rng(2);
  int reliable = 0;
  for (int t = 0; t < 300; ++t) {
    const auto [F, G] = random_pair(rng);
    const ContinuationResult r = continuation(F, G);
    if (!r.reliable) continue;
    ++reliable;
    CHECK(r.gamma[1] == 1);
    CHECK(r.gamma[0] == r.gamma[2]);
    CHECK(r.overlap_defect < 1e-6);
    CHECK(r.min_gap > 0.0);
  }
  CHECK(reliable > 250);
}

TEST_CASE("continuation: stable under doubling and under G -> -G") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto [F, G] = random_pair(rng);
    ContinuationOptions o;
    o.steps = 1024;
    const ContinuationResult a = continuation(F, G, o);
    if (!a.reliable || a.min_gap < 0.01) continue;
    o.steps = 2048;
    const ContinuationResult b = continuation(F, G, o);
    CHECK(b.reliable);
    CHECK(a.gamma == b.gamma);
    CHECK(b.min_gap == doctest::Approx(a.min_gap).epsilon(1e-6));
    const ContinuationResult c = continuation(F, -1.0 * G, o);
    CHECK(c.gamma == a.gamma);
    CHECK(c.min_gap == doctest::Approx(a.min_gap).epsilon(1e-6));
  }
}

TEST_CASE("continuation: refined minimum gap matches a brute-force scan") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto [F, G] = random_pair(rng);
    const ContinuationResult r = continuation(F, G, {.steps = 256, .max_refine = 0});
    double brute = 1e9;
    for (int k = 0; k < 200000; ++k) brute = std::min(brute, eig(h_of_theta(F, G, 2 * kPi * k / 200000)).min_gap());
    CHECK(r.min_gap <= brute + 1e-12);
    CHECK(r.min_gap == doctest::Approx(brute).epsilon(1e-3));
    CHECK(eig(h_of_theta(F, G, r.min_gap_theta)).min_gap() == doctest::Approx(r.min_gap).epsilon(1e-12));
  }
}

TEST_CASE("transported_frame") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto [F, G] = random_pair(rng);
    const Spectrum s0 = eig(F);
    const TransportedFrame f0 = transported_frame(F, G, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(f0.vectors[i][j] == s0.vectors[i][j]);

    const ContinuationResult c = continuation(F, G);
    if (!c.reliable) continue;
    const TransportedFrame f2 = transported_frame(F, G, 2 * kPi);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(f2.vectors[i][j] == doctest::Approx(c.gamma[i] * s0.vectors[i][j]).epsilon(1e-8));

    std::vector<double> thetas;
    for (int k = 0; k <= 16; ++k) thetas.push_back(2 * kPi * k / 16);
    const TransportResult tr = transport(F, G, thetas);
    REQUIRE(tr.frames.size() == thetas.size());
    for (const TransportedFrame& f : tr.frames) {
      CHECK(orthogonality_defect(f.vectors) < 1e-12);
      const Spectrum s = eig(h_of_theta(F, G, f.theta));
      for (int i = 0; i < 3; ++i) CHECK(std::abs(std::abs(dot(f.vectors[i], s.vectors[i])) - 1.0) < 1e-12);
    }
  }
}
