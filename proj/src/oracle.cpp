#include "tristate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace tristate {

SymMatrix3 h_of_theta(const SymMatrix3& F, const SymMatrix3& G, double theta) {
  return std::cos(theta) * F + std::sin(theta) * G;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double gap_at(const SymMatrix3& F, const SymMatrix3& G, double theta) { return eig(h_of_theta(F, G, theta)).min_gap(); }

// Align v's sign with prev; returns 1 - |overlap|.
double align(Vec3& v, const Vec3& prev) {
  const double ov = dot(v, prev);
  if (ov < 0) v = scaled(v, -1.0);
  return 1.0 - std::abs(ov);
}

struct Pass {
  std::array<int, 3> gamma{};
  double defect = 0.0;
  double grid_min = 0.0;
  int grid_arg = 0;
};

// Spectra at theta_k = 2 pi k / n, k = 0..n. Doubling keeps the even points.
std::vector<Spectrum> sample(const SymMatrix3& F, const SymMatrix3& G, int n) {
  std::vector<Spectrum> grid;
  grid.reserve(n + 1);
  grid.push_back(eig(F));
  for (int k = 1; k <= n; ++k) grid.push_back(eig(h_of_theta(F, G, kTwoPi * k / n)));
  return grid;
}

std::vector<Spectrum> doubled(const SymMatrix3& F, const SymMatrix3& G, const std::vector<Spectrum>& coarse) {
  const int n = 2 * (static_cast<int>(coarse.size()) - 1);
  std::vector<Spectrum> grid;
  grid.reserve(n + 1);
  for (int k = 0; k <= n; ++k)
    grid.push_back(k % 2 == 0 ? coarse[k / 2] : eig(h_of_theta(F, G, kTwoPi * k / n)));
  return grid;
}

Pass march(const std::vector<Spectrum>& grid) {
  const int n = static_cast<int>(grid.size()) - 1;
  Pass pass;
  std::array<Vec3, 3> prev = grid[0].vectors;
  pass.grid_min = grid[0].min_gap();
  pass.grid_arg = 0;
  for (int k = 1; k <= n; ++k) {
    std::array<Vec3, 3> v = grid[k].vectors;
    if (k < n && grid[k].min_gap() < pass.grid_min) {
      pass.grid_min = grid[k].min_gap();
      pass.grid_arg = k;
    }
    for (int i = 0; i < 3; ++i) pass.defect = std::max(pass.defect, align(v[i], prev[i]));
    prev = v;
  }
  for (int i = 0; i < 3; ++i) {
    const double closing = dot(grid[0].vectors[i], prev[i]);
    pass.gamma[i] = closing >= 0 ? 1 : -1;
    pass.defect = std::max(pass.defect, 1.0 - std::abs(closing));
  }
  return pass;
}

// Minimum of the gap near grid point k: parabolic vertex as a first guess,
// then golden-section on the true gap, since at a crossing the gap is
// V-shaped and a parabola overestimates the minimum.
std::pair<double, double> refine_min(const SymMatrix3& F, const SymMatrix3& G, int n, int k, double gk) {
  const double h = kTwoPi / n;
  const double t0 = kTwoPi * k / n;
  const double gm = gap_at(F, G, t0 - h), gp = gap_at(F, G, t0 + h);
  double best_t = t0, best = gk;
  const double curv = gm + gp - 2.0 * gk;
  if (curv > 0) {
    const double t = t0 + 0.5 * h * (gm - gp) / curv;
    const double gt = gap_at(F, G, t);
    if (gt < best) {
      best = gt;
      best_t = t;
    }
  }
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = t0 - h, hi = t0 + h;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = gap_at(F, G, x1), f2 = gap_at(F, G, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = gap_at(F, G, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = gap_at(F, G, x2);
    }
  }
  if (f1 < best) {
    best = f1;
    best_t = x1;
  }
  if (f2 < best) {
    best = f2;
    best_t = x2;
  }
  best_t = std::fmod(best_t + kTwoPi, kTwoPi);
  return {best, best_t};
}

}  // namespace

ContinuationResult continuation(const SymMatrix3& F, const SymMatrix3& G, const ContinuationOptions& opts) {
  ContinuationResult res;
  const int base = std::max(opts.steps, 64);
  std::vector<Spectrum> grid;
  for (int pass_no = 0; pass_no <= opts.max_refine; ++pass_no) {
    grid = pass_no == 0 ? sample(F, G, base) : doubled(F, G, grid);
    const int n = static_cast<int>(grid.size()) - 1;
    const Pass pass = march(grid);
    const auto [gap, theta] = refine_min(F, G, n, pass.grid_arg, pass.grid_min);
    res.gamma = pass.gamma;
    res.min_gap = gap;
    res.min_gap_theta = theta;
    res.steps = n;
    res.overlap_defect = pass.defect;
    if (pass.defect < opts.odef_tol) break;
    // A collapsed gap cannot be rescued by a finer grid.
    if (gap <= opts.gap_floor) break;
  }
  res.reliable = res.min_gap > opts.gap_floor && res.overlap_defect < opts.odef_tol;
  return res;
}

TransportResult transport(const SymMatrix3& F, const SymMatrix3& G, std::span<const double> thetas,
                          const ContinuationOptions& opts) {
  TransportResult out;
  const int base = std::max(opts.steps, 64);
  for (int pass_no = 0; pass_no <= opts.max_refine; ++pass_no) {
    const double hmax = kTwoPi / (static_cast<double>(base) * (1 << pass_no));
    out.frames.clear();
    out.overlap_defect = 0.0;
    std::array<Vec3, 3> prev = eig(F).vectors;
    double at = 0.0;
    for (double target : thetas) {
      const int sub = std::max(1, static_cast<int>(std::ceil((target - at) / hmax - 1e-9)));
      const double from = at;
      for (int k = 1; target > from && k <= sub; ++k) {
        const double theta = k == sub ? target : from + (target - from) * k / sub;
        Spectrum s = eig(h_of_theta(F, G, theta));
        for (int i = 0; i < 3; ++i) out.overlap_defect = std::max(out.overlap_defect, align(s.vectors[i], prev[i]));
        prev = s.vectors;
      }
      at = std::max(at, target);
      out.frames.push_back({target, prev});
    }
    if (out.overlap_defect < opts.odef_tol) break;
  }
  out.reliable = out.overlap_defect < opts.odef_tol;
  return out;
}

TransportedFrame transported_frame(const SymMatrix3& F, const SymMatrix3& G, double theta,
                                   const ContinuationOptions& opts) {
  const double t[1] = {theta};
  return transport(F, G, t, opts).frames.front();
}

}  // namespace tristate
