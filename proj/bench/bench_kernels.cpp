// Timing comparison of the OpenMP kernels against their serial reference
// implementations: the grid evaluator (h over a dense shape-ratio grid)
// and the n-body pair summation.

#include <chrono>
#include <cstdio>
#include <vector>

#include "rosette/grid.hpp"
#include "rosette/nbody.hpp"
#include "rosette/potential.hpp"

using namespace rosette;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void bench_grid(int n, int points, int reps) {
  const AngleTable table(n);
  std::vector<double> xs = log_grid(1e-4, 0.9999, points - 1);
  std::vector<double> serial(xs.size()), parallel(xs.size());
  auto f = [&](double x) { return h_split(x, 0.37, n, table).h; };

  double t_serial = 0.0, t_parallel = 0.0;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    eval_on_grid_serial(f, xs, serial);
    t_serial += ms_since(t0);
    t0 = clock_type::now();
    eval_on_grid(f, xs, parallel);
    t_parallel += ms_since(t0);
  }
  bool identical = true;
  for (std::size_t i = 0; i < xs.size(); ++i)
    identical = identical && serial[i] == parallel[i];
  std::printf("grid eval   n=%-4d %7d pts  serial %8.2f ms  parallel %8.2f ms  "
              "speedup %.2fx  bitwise %s\n",
              n, points, t_serial / reps, t_parallel / reps,
              t_serial / t_parallel, identical ? "equal" : "DIFFER");
}

void bench_nbody(int n, int reps) {
  PlanarConfiguration c = build_configuration(0.7, RosetteParams(n, 0.8, 2.0), 1.0);
  double t_serial = 0.0, t_parallel = 0.0;
  NewtonianEval a, b;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    a = newtonian_serial(c);
    t_serial += ms_since(t0);
    t0 = clock_type::now();
    b = newtonian(c);
    t_parallel += ms_since(t0);
  }
  bool identical = a.U == b.U && a.I == b.I;
  for (std::size_t i = 0; i < c.positions.size(); ++i)
    identical = identical && a.gradient[i][0] == b.gradient[i][0] &&
                a.gradient[i][1] == b.gradient[i][1];
  std::printf("n-body sums %5zu bodies      serial %8.2f ms  parallel %8.2f ms  "
              "speedup %.2fx  bitwise %s\n",
              c.positions.size(), t_serial / reps, t_parallel / reps,
              t_serial / t_parallel, identical ? "equal" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("workers: %d (ROSETTE_THREADS; 0 = OpenMP default)\n", worker_threads());
  bench_grid(16, 1 << 16, 5);
  bench_grid(256, 1 << 13, 5);
  bench_nbody(500, 5);
  bench_nbody(2000, 3);
  return 0;
}
