#include "tristate/mirror.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "tristate/error.hpp"

namespace tristate {

ParityParts parity_split(const SymMatrix3& h, const ParitySignature& p) {
  const SymMatrix3 php = conjugate_by_signs(h, p.p);
  return {0.5 * (h + php), 0.5 * (h - php)};
}

bool check_symmetry(const SymMatrix3& F, const SymMatrix3& G, const ParitySignature& p, double tol) {
  return frobenius(conjugate_by_signs(F, p.p) - F) <= tol && frobenius(conjugate_by_signs(G, p.p) + G) <= tol;
}

std::array<int, 3> sigma_from(const std::array<int, 3>& gamma, const std::array<int, 3>& parity) {
  return {gamma[0] * parity[0], gamma[1] * parity[1], gamma[2] * parity[2]};
}

namespace {

Vec3 apply_parity(const ParitySignature& p, const Vec3& v) { return {p.p[0] * v[0], p.p[1] * v[1], p.p[2] * v[2]}; }

}  // namespace

MirrorReport mirror_report(const SymMatrix3& F, const SymMatrix3& G, const ParitySignature& p, int theta_samples,
                           const ContinuationOptions& opts) {
  if (theta_samples < 1) throw Error(ErrorCode::InvalidInput, "theta_samples must be positive");
  if (!check_symmetry(F, G, p))
    throw Error(ErrorCode::SymmetryViolated, "F must be P-even and G P-odd");
  MirrorReport rep;
  rep.continuation = continuation(F, G, opts);
  if (!rep.continuation.reliable)
    throw Error(ErrorCode::UnreliableContinuation, "the loop passes too close to a degeneracy");
  rep.gamma = rep.continuation.gamma;
  rep.samples = theta_samples;

  std::vector<double> thetas;
  thetas.push_back(0.0);
  for (int j = 1; j <= theta_samples; ++j) thetas.push_back(2.0 * std::numbers::pi * j / (theta_samples + 1));
  ContinuationOptions topts = opts;
  topts.steps = rep.continuation.steps;
  const TransportResult path = transport(F, G, thetas, topts);
  if (!path.reliable) throw Error(ErrorCode::UnreliableContinuation, "transport did not converge");

  for (int i = 0; i < 3; ++i) {
    const Vec3& v0 = path.frames[0].vectors[i];
    const double par = dot(v0, apply_parity(p, v0));
    if (std::abs(par) <= 0.99)
      throw Error(ErrorCode::InconsistentSigma, "band " + std::to_string(i + 1) + " has no definite parity");
    rep.band_parity[i] = par > 0 ? 1 : -1;
  }

  // theta_j and theta_{n+1-j} are mirror images.
  for (int i = 0; i < 3; ++i) {
    int sigma = 0;
    for (int j = 1; j <= theta_samples; ++j) {
      const Vec3& here = path.frames[j].vectors[i];
      const Vec3& there = path.frames[theta_samples + 1 - j].vectors[i];
      const Vec3 ph = apply_parity(p, here);
      const int s = dot(there, ph) >= 0 ? 1 : -1;
      if (sigma == 0) sigma = s;
      if (s != sigma)
        throw Error(ErrorCode::InconsistentSigma, "sigma changes sign along band " + std::to_string(i + 1));
      const Vec3 diff{there[0] - s * ph[0], there[1] - s * ph[1], there[2] - s * ph[2]};
      rep.max_residual = std::max(rep.max_residual, norm(diff));
    }
    rep.sigma[i] = sigma;
  }
  rep.identity_holds = rep.sigma == sigma_from(rep.gamma, rep.band_parity);
  return rep;
}

}  // namespace tristate
