#include "rosette/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rosette {

namespace {

std::atomic<int> g_threads{-1};

int threads_from_env() {
  const char* s = std::getenv("ROSETTE_THREADS");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v < 0) return 0;
  return static_cast<int>(v);
}

}  // namespace

int worker_threads() {
  int v = g_threads.load(std::memory_order_relaxed);
  if (v < 0) {
    v = threads_from_env();
    g_threads.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_worker_threads(int threads) {
  g_threads.store(threads < 0 ? 0 : threads, std::memory_order_relaxed);
}

std::vector<double> uniform_grid(double lo, double hi, int cells) {
  if (!(lo < hi) || cells < 1) throw std::invalid_argument("uniform_grid");
  std::vector<double> xs(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i)
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / cells;
  return xs;
}

std::vector<double> log_grid(double lo, double hi, int cells) {
  if (!(0.0 < lo && lo < hi) || cells < 1) throw std::invalid_argument("log_grid");
  std::vector<double> xs(static_cast<std::size_t>(cells) + 1);
  double la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i <= cells; ++i)
    xs[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / cells);
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

std::vector<double> pole_clustered_grid(double lo, double hi, int cells,
                                        double min_gap) {
  if (!(lo < hi) || cells < 1 || !(min_gap > 0.0))
    throw std::invalid_argument("pole_clustered_grid");
  // Distances from hi shrink geometrically from (hi - lo) to min_gap.
  std::vector<double> xs(static_cast<std::size_t>(cells) + 1);
  double d0 = hi - lo;
  double ratio = std::log(min_gap / d0) / cells;
  for (int i = 0; i <= cells; ++i)
    xs[static_cast<std::size_t>(i)] = hi - d0 * std::exp(ratio * i);
  xs.front() = lo;
  return xs;
}

std::vector<double> unit_interval_scan_grid(int cells, double lo, double pole_gap) {
  if (cells < 8) throw std::invalid_argument("unit_interval_scan_grid");
  int third = cells / 3;
  std::vector<double> xs = log_grid(lo, 0.5, third);
  std::vector<double> mid = uniform_grid(0.5, 0.9, third);
  std::vector<double> top = pole_clustered_grid(0.9, 1.0 - pole_gap,
                                                cells - 2 * third, pole_gap);
  xs.insert(xs.end(), mid.begin() + 1, mid.end());
  xs.insert(xs.end(), top.begin() + 1, top.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace rosette
