#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rosette/params.hpp"

namespace rosette {

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

enum class IntervalTag { below_one, at_one, above_one };

struct Root {
  double x;
  double residual;       // |F(x, params)| / max(1, mu)
  IntervalTag interval;
};

struct RootSet {
  std::vector<Root> roots;  // strictly increasing in x
  RosetteParams params;
  double grid_resolution;
};

// A point where mu = h(x*, eps) and dh/dx(x*, eps) = 0: two transversal
// roots coalesce and the configuration count changes by 2.
struct FoldPoint {
  double x_star;
  double mu0;
  double epsilon;
  int n;
  double residual_f;       // |F(x*, eps, mu0)|
  double residual_dfdx;    // |dF/dx(x*, eps, mu0)|
  bool non_degenerate;     // |d2F/dx2| bounded away from 0
};

struct EvaluationError : std::runtime_error {
  double probe;
  EvaluationError(const std::string& msg, double probe_)
      : std::runtime_error(msg), probe(probe_) {}
};

struct ConvergenceError : std::runtime_error {
  double best_x;
  double best_f;
  ConvergenceError(const std::string& msg, double x, double f)
      : std::runtime_error(msg), best_x(x), best_f(f) {}
};

// Raised when a bracket refines to a collapsing width while |f| stalls
// above tolerance: a tangential (double) root. Callers should switch to
// find_fold.
struct FoldSuspectedError : std::runtime_error {
  double x;
  FoldSuspectedError(double x_)
      : std::runtime_error("fold suspected: |f| stalls while bracket collapses"),
        x(x_) {}
};

struct FoldNotFoundError : std::runtime_error {
  FoldNotFoundError() : std::runtime_error("no sign change of dh/dx in interval") {}
};

using ScalarFn = std::function<double(double)>;

// Sign-change scan over an explicit strictly increasing grid, with
// adaptive bisection of cells around local |f| minima (guards against
// close root pairs near folds). Deterministic.
std::vector<Bracket> bracket_roots_on_grid(const ScalarFn& f,
                                           const std::vector<double>& grid,
                                           int max_depth = 12);

// Convenience: uniform initial grid of `initial_cells` cells on [lo, hi].
std::vector<Bracket> bracket_roots(const ScalarFn& f, double lo, double hi,
                                   int initial_cells, int max_depth = 12);

inline constexpr double kDefaultTolX = 1e-13;
inline constexpr double kDefaultTolF = 1e-11;

struct RefinedRoot {
  double x;
  double residual;
};

// Hybrid secant/bisection refinement; bisection fallback guarantees
// convergence within 200 iterations.
RefinedRoot refine_root(const ScalarFn& f, const Bracket& bracket,
                        double tol_x = kDefaultTolX, double tol_f = kDefaultTolF);

// Locates the fold (x*, mu0) of mu = h(x, eps) in `search_interval` by
// bracketing sign changes of dh/dx, refining, and evaluating h. When
// several critical points exist the one with the largest h (the local
// maximum crossed by an increasing mu) is returned. For eps = 1 the pole
// at x = 1 disappears (h = h0) and a (0,1) interval is extended across 1
// to capture the symmetric fold at x* = 1.
FoldPoint find_fold(double epsilon, int n, double lo, double hi);

}  // namespace rosette
