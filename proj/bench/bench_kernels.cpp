// Serial reference versus OpenMP kernels. Usage: tristate_bench [samples]
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tristate/degeneracy.hpp"
#include "tristate/scan.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tristate;
  const std::size_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 500;
#ifdef _OPENMP
  std::cout << "threads " << omp_get_max_threads() << '\n';
#else
  std::cout << "threads 1 (built without OpenMP)\n";
#endif

  ScanOptions opts;
  opts.samples = samples;
  opts.seed = 7;
  ScanReport serial, parallel;
  const double ts = time_ms([&] { serial = scan_serial(opts); });
  const double tp = time_ms([&] { parallel = scan(opts); });
  std::cout << "scan " << samples << " samples: serial " << ts << " ms, omp " << tp << " ms, identical "
            << (serial.agreements == parallel.agreements && serial.gap_histogram == parallel.gap_histogram) << '\n';

  const GeodesicFrame frame = frame_from_coords(0.6, GCoords{0.3, 0.5, 0.2, 0.7});
  NearestOptions nopts;
  nopts.grid = 256;
  NearestResult a, b;
  const double ns = time_ms([&] { a = nearest_degenerate_serial(frame, nopts); });
  const double np = time_ms([&] { b = nearest_degenerate(frame, nopts); });
  std::cout << "nearest grid 256^2: serial " << ns << " ms, omp " << np << " ms, identical "
            << (a.distance == b.distance) << '\n';

  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<SymMatrix3> mats(200000);
  for (auto& m : mats)
    m = SymMatrix3::from_entries(normal(rng), normal(rng), normal(rng), normal(rng), normal(rng), normal(rng));
  double sink = 0.0;
  const double te = time_ms([&] {
    for (const auto& m : mats) sink += eig(m).values[0];
  });
  const double tj = time_ms([&] {
    for (const auto& m : mats) sink += eig_jacobi(m).values[0];
  });
  std::cout << "eig x" << mats.size() << ": closed form " << te << " ms, jacobi " << tj << " ms (" << sink
            << ")\n";
  return 0;
}
