#pragma once

#include <span>
#include <vector>

namespace rosette {

// Number of worker threads for the parallel kernels. 0 = OpenMP default.
// Reads ROSETTE_THREADS once on first use; 1 forces the serial path.
int worker_threads();
void set_worker_threads(int threads);

// Evaluates f at every grid point, results in grid order. The serial
// variant is the reference implementation; the default variant runs the
// same loop under OpenMP when more than one worker is configured.
// Results are written by index, so both produce identical output.
template <typename F>
void eval_on_grid_serial(F&& f, std::span<const double> xs, std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
}

template <typename F>
void eval_on_grid(F&& f, std::span<const double> xs, std::span<double> out);

// Grid on (lo, hi) with cells geometrically clustered toward the `hi`
// endpoint (distances hi - x log-spaced down to min_gap); used for the
// pole of h at x = 1.
std::vector<double> pole_clustered_grid(double lo, double hi, int cells,
                                        double min_gap = 1e-10);

// Log-spaced grid on [lo, hi], lo > 0.
std::vector<double> log_grid(double lo, double hi, int cells);

// Uniform grid on [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, int cells);

// Standard scan grid for root hunting on (0, 1): log-spaced low end,
// uniform middle, pole-clustered approach to 1; strictly increasing and
// deduplicated.
std::vector<double> unit_interval_scan_grid(int cells = 2048,
                                            double lo = 1e-6,
                                            double pole_gap = 1e-9);

}  // namespace rosette

// -- implementation ---------------------------------------------------------

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rosette {

template <typename F>
void eval_on_grid(F&& f, std::span<const double> xs, std::span<double> out) {
#ifdef _OPENMP
  int nt = worker_threads();
  if (nt != 1 && xs.size() >= 256) {
    const long long m = static_cast<long long>(xs.size());
#pragma omp parallel for schedule(static) num_threads(nt > 0 ? nt : omp_get_max_threads())
    for (long long i = 0; i < m; ++i)
      out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    return;
  }
#endif
  eval_on_grid_serial(f, xs, out);
}

}  // namespace rosette
