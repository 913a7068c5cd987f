#pragma once

#include <array>

#include "tristate/oracle.hpp"
#include "tristate/symmat.hpp"

namespace tristate {

/// Parities of the three unperturbed states; P = diag(p).
struct ParitySignature {
  std::array<int, 3> p{1, 1, 1};
};

struct ParityParts {
  SymMatrix3 even;
  SymMatrix3 odd;
};

/// even = (h + PhP)/2, odd = (h - PhP)/2.
ParityParts parity_split(const SymMatrix3& h, const ParitySignature& p);

/// PFP = F and PGP = -G, each within tol in Frobenius norm. This is what
/// makes P H(theta) P = H(2 pi - theta).
bool check_symmetry(const SymMatrix3& F, const SymMatrix3& G, const ParitySignature& p, double tol = 1e-10);

/// sigma_i = gamma_i * parity_i.
std::array<int, 3> sigma_from(const std::array<int, 3>& gamma, const std::array<int, 3>& parity);

struct MirrorReport {
  std::array<int, 3> sigma{};
  std::array<int, 3> gamma{};
  std::array<int, 3> band_parity{};  // parity of the theta = 0 eigenvectors
  double max_residual = 0.0;         // max |Psi_i(2pi - theta) - sigma_i P Psi_i(theta)|
  int samples = 0;
  bool identity_holds = false;       // sigma == gamma * band_parity
  ContinuationResult continuation;
};

/// Checks Psi_i(2 pi - theta) = sigma_i P Psi_i(theta) at theta_j = 2 pi j/(n+1),
/// j = 1..n. Throws SymmetryViolated, UnreliableContinuation or
/// InconsistentSigma.
MirrorReport mirror_report(const SymMatrix3& F, const SymMatrix3& G, const ParitySignature& p,
                           int theta_samples = 32, const ContinuationOptions& opts = {});

}  // namespace tristate
