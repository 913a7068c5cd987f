#include "tristate/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <tuple>
#include <vector>

#include "nelder_mead.hpp"
#include "tristate/error.hpp"

namespace tristate {

std::string_view to_string(Branch b) { return b == Branch::Plus ? "+" : "-"; }

SymMatrix3 d_point(Branch branch, const Vec3& n) {
  return (branch_sign(branch) * qbasis::kInvSqrt6) * (SymMatrix3::identity() - 3.0 * SymMatrix3::outer(n));
}

DegeneratePoint b_point(Branch branch, const Vec3& n_in, double psi, const Tolerances& tol) {
  const double nn = norm(n_in);
  if (!(std::abs(nn - 1.0) < 1e-9)) throw Error(ErrorCode::DomainError, "n must be a unit vector");
  const Vec3 n = scaled(n_in, 1.0 / nn);
  const auto ang = psi_angles(psi);
  double c = 0.0, s = 0.0;
  for (int i = 0; i < 3; ++i) {
    c += std::cos(ang[i]) * n[i] * n[i];
    s += std::sin(ang[i]) * n[i] * n[i];
  }
  const double denom2 = 1.0 - c * c;
  if (!(denom2 > tol.parallel_anchor))
    throw Error(ErrorCode::ParallelToAnchor, "D(n) is parallel to F; its projection is undefined");
  const double inv = 1.0 / std::sqrt(denom2);
  const double sg = branch_sign(branch);
  constexpr double r3 = std::numbers::sqrt3;

  DegeneratePoint p;
  p.branch = branch;
  p.n = n;
  p.c = c;
  p.s = s;
  p.b = {-sg * r3 * n[1] * n[2] * inv, -sg * r3 * n[0] * n[2] * inv, -sg * r3 * n[1] * n[0] * inv, sg * s * inv};
  p.matrix = matrix_from_coords(p.b, psi);
  return p;
}

namespace {

Vec3 sphere(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double dist2(const GCoords& a, const GCoords& b) {
  const double d1 = a.g1 - b.g1, d2 = a.g2 - b.g2, d3 = a.g3 - b.g3, d4 = a.g4 - b.g4;
  return d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4;
}

struct Cell {
  double d2 = std::numeric_limits<double>::infinity();
  int branch = 0;
  int i = 0;
  int j = 0;
};

// Lexicographic tie-break keeps the reduction independent of evaluation order.
bool better(const Cell& a, const Cell& b) {
  return std::tie(a.d2, a.i, a.j, a.branch) < std::tie(b.d2, b.i, b.j, b.branch);
}

Cell evaluate(const GeodesicFrame& frame, const NearestOptions& o, const Tolerances& tol, int idx) {
  const int per_branch = o.grid * o.grid;
  Cell cell;
  cell.branch = idx / per_branch;
  cell.i = (idx % per_branch) / o.grid;
  cell.j = idx % o.grid;
  const double theta = (cell.i + 0.5) * (std::numbers::pi / 2.0) / o.grid;
  const double phi = (cell.j + 0.5) * (2.0 * std::numbers::pi) / o.grid;
  try {
    const auto p = b_point(cell.branch == 0 ? Branch::Plus : Branch::Minus, sphere(theta, phi), frame.psi, tol);
    cell.d2 = dist2(p.b, frame.g);
  } catch (const Error&) {
    cell.d2 = std::numeric_limits<double>::quiet_NaN();
  }
  return cell;
}

struct Seed {
  int branch;
  std::array<double, 2> x;  // (theta, phi)
};

// On the degenerate set g2 g3 / g1 is proportional to n1^2 (and cyclically),
// so g can be inverted directly; the result is a good start when g is on or
// near the set, where the grid may only graze the valley.
std::optional<Seed> inversion_seed(const GeodesicFrame& frame, const Tolerances& tol) {
  const GCoords& g = frame.g;
  const double floor = 1e-12;
  if (std::abs(g.g1) < floor || std::abs(g.g2) < floor || std::abs(g.g3) < floor) return std::nullopt;
  const Vec3 w{std::abs(g.g2 * g.g3 / g.g1), std::abs(g.g1 * g.g3 / g.g2), std::abs(g.g1 * g.g2 / g.g3)};
  const double sum = w[0] + w[1] + w[2];
  const Vec3 m{std::sqrt(w[0] / sum), std::sqrt(w[1] / sum), std::sqrt(w[2] / sum)};
  double best = std::numeric_limits<double>::infinity();
  std::optional<Seed> out;
  for (int branch = 0; branch < 2; ++branch)
    for (int signs = 0; signs < 4; ++signs) {
      const Vec3 n{signs & 1 ? -m[0] : m[0], signs & 2 ? -m[1] : m[1], m[2]};
      try {
        const double d2 = dist2(b_point(branch == 0 ? Branch::Plus : Branch::Minus, n, frame.psi, tol).b, g);
        if (d2 < best) {
          best = d2;
          out = Seed{branch, {std::acos(std::clamp(n[2], -1.0, 1.0)), std::atan2(n[1], n[0])}};
        }
      } catch (const Error&) {
      }
    }
  return out;
}

NearestResult refine(const GeodesicFrame& frame, std::vector<Cell> cells, const NearestOptions& o,
                     const Tolerances& tol) {
  NearestResult out;
  out.excluded_cells = static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) {
    return std::isnan(c.d2);
  }));
  // Seed from distinct basins: cells no worse than any grid neighbour (phi
  // wraps, theta is clamped). Adjacent cells of one basin would otherwise
  // crowd out a narrow valley elsewhere.
  auto at = [&](int b, int i, int j) -> const Cell& {
    return cells[(b * o.grid + i) * o.grid + ((j + o.grid) % o.grid)];
  };
  std::vector<Cell> seeds;
  for (const Cell& c : cells) {
    if (std::isnan(c.d2)) continue;
    bool minimum = true;
    for (int di = -1; di <= 1 && minimum; ++di)
      for (int dj = -1; dj <= 1 && minimum; ++dj) {
        const int i = c.i + di;
        if ((di == 0 && dj == 0) || i < 0 || i >= o.grid) continue;
        const Cell& nb = at(c.branch, i, c.j + dj);
        if (!std::isnan(nb.d2) && better(nb, c)) minimum = false;
      }
    if (minimum) seeds.push_back(c);
  }
  std::erase_if(cells, [](const Cell& c) { return std::isnan(c.d2); });
  if (seeds.empty()) seeds = cells;
  cells = std::move(seeds);
  const std::size_t k = std::min<std::size_t>(std::max(1, o.candidates), cells.size());
  std::partial_sort(cells.begin(), cells.begin() + k, cells.end(), better);

  const double dth = (std::numbers::pi / 2.0) / o.grid;
  const double dph = (2.0 * std::numbers::pi) / o.grid;
  std::vector<Seed> starts;
  for (std::size_t c = 0; c < k; ++c)
    starts.push_back({cells[c].branch, {(cells[c].i + 0.5) * dth, (cells[c].j + 0.5) * dph}});
  if (auto s = inversion_seed(frame, tol)) starts.push_back(*s);

  double best = std::numeric_limits<double>::infinity();
  for (const Seed& seed : starts) {
    const Branch br = seed.branch == 0 ? Branch::Plus : Branch::Minus;
    auto objective = [&](const std::array<double, 2>& x) {
      try {
        return dist2(b_point(br, sphere(x[0], x[1]), frame.psi, tol).b, frame.g);
      } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
      }
    };
    const auto x = detail::nelder_mead<2>(objective, seed.x, {0.5 * dth, 0.5 * dph}, o.refine_iters);
    const double d2 = objective(x);
    if (d2 < best) {
      best = d2;
      out.point = b_point(br, sphere(x[0], x[1]), frame.psi, tol);
    }
  }
  out.distance = std::sqrt(best);
  out.canonical = canonicalize_signs(out.point.b).first;
  return out;
}

}  // namespace

NearestResult nearest_degenerate(const GeodesicFrame& frame, const NearestOptions& opts, const Tolerances& tol) {
  const int total = 2 * opts.grid * opts.grid;
  std::vector<Cell> cells(total);
#pragma omp parallel for schedule(static)
  for (int idx = 0; idx < total; ++idx) cells[idx] = evaluate(frame, opts, tol, idx);
  return refine(frame, std::move(cells), opts, tol);
}

NearestResult nearest_degenerate_serial(const GeodesicFrame& frame, const NearestOptions& opts,
                                        const Tolerances& tol) {
  const int total = 2 * opts.grid * opts.grid;
  std::vector<Cell> cells;
  cells.reserve(total);
  for (int idx = 0; idx < total; ++idx) cells.push_back(evaluate(frame, opts, tol, idx));
  return refine(frame, std::move(cells), opts, tol);
}

double degeneracy_angle(const SymMatrix3& F, const DegeneratePoint& B) {
  if (std::abs(inner(B.matrix, F)) > 1e-10)
    throw Error(ErrorCode::InconsistentInputs, "B does not lie in the equator of F");
  const SymMatrix3 D = d_point(B.branch, B.n);
  const double theta = std::atan2(inner(D, B.matrix), inner(D, F));
  const SymMatrix3 h = std::cos(theta) * F + std::sin(theta) * B.matrix;
  if (frobenius(h - D) > 1e-8)
    throw Error(ErrorCode::InconsistentInputs, "geodesic through F and B does not reach D(n)");
  return theta;
}

}  // namespace tristate
