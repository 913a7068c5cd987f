#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace tristate::detail {

/// Downhill simplex with standard coefficients. Restarts from the current
/// best vertex whenever the simplex collapses, until the budget is spent.
template <std::size_t N, class F>
std::array<double, N> nelder_mead(F&& f, std::array<double, N> x0, std::array<double, N> step, int iters) {
  using Pt = std::array<double, N>;
  std::array<Pt, N + 1> x;
  std::array<double, N + 1> fx;
  auto reset = [&](const Pt& base) {
    x[0] = base;
    for (std::size_t k = 0; k < N; ++k) {
      x[k + 1] = base;
      x[k + 1][k] += step[k];
    }
    for (std::size_t k = 0; k <= N; ++k) fx[k] = f(x[k]);
  };
  reset(x0);

  auto along = [](const Pt& c, const Pt& w, double t) {
    Pt r;
    for (std::size_t k = 0; k < N; ++k) r[k] = c[k] + t * (w[k] - c[k]);
    return r;
  };

  for (int it = 0; it < iters; ++it) {
    std::array<std::size_t, N + 1> ord;
    for (std::size_t k = 0; k <= N; ++k) ord[k] = k;
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t lo = ord[0], hi = ord[N], second = ord[N - 1];

    double size = 0.0;
    for (std::size_t k = 0; k <= N; ++k)
      for (std::size_t d = 0; d < N; ++d) size = std::max(size, std::abs(x[k][d] - x[lo][d]));
    if (size < 1e-14) {
      for (auto& s : step) s *= 1e-3;
      if (std::abs(step[0]) < 1e-15) break;
      reset(x[lo]);
      continue;
    }

    Pt centroid{};
    for (std::size_t k = 0; k <= N; ++k) {
      if (k == hi) continue;
      for (std::size_t d = 0; d < N; ++d) centroid[d] += x[k][d] / N;
    }
    const Pt xr = along(centroid, x[hi], -1.0);
    const double fr = f(xr);
    if (fr < fx[lo]) {
      const Pt xe = along(centroid, x[hi], -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        x[hi] = xe;
        fx[hi] = fe;
      } else {
        x[hi] = xr;
        fx[hi] = fr;
      }
    } else if (fr < fx[second]) {
      x[hi] = xr;
      fx[hi] = fr;
    } else {
      const bool outside = fr < fx[hi];
      const Pt xc = along(centroid, outside ? xr : x[hi], 0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fx[hi])) {
        x[hi] = xc;
        fx[hi] = fc;
      } else {
        for (std::size_t k = 0; k <= N; ++k) {
          if (k == lo) continue;
          x[k] = along(x[lo], x[k], 0.5);
          fx[k] = f(x[k]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k <= N; ++k)
    if (fx[k] < fx[best]) best = k;
  return x[best];
}

}  // namespace tristate::detail
