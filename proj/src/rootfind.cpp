#include "rosette/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rosette/grid.hpp"
#include "rosette/potential.hpp"

namespace rosette {

namespace {

bool sign_change(double a, double b) {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

// Depth-limited probe of a |f| dip that shows no sign change on the
// initial grid: a close pair of roots (near a fold) hides inside one cell.
void probe_dip(const ScalarFn& f, double lo, double f_lo, double hi, double f_hi,
               int depth, std::vector<Bracket>& out) {
  if (depth <= 0) return;
  double m = 0.5 * (lo + hi);
  double f_m = f(m);
  if (!std::isfinite(f_m)) throw EvaluationError("non-finite probe value", m);
  if (sign_change(f_lo, f_m)) {
    out.push_back(Bracket{lo, m, f_lo, f_m});
    out.push_back(Bracket{m, hi, f_m, f_hi});
    return;
  }
  // Descend into the half closer to the dip.
  if (std::abs(f_lo) < std::abs(f_hi))
    probe_dip(f, lo, f_lo, m, f_m, depth - 1, out);
  else
    probe_dip(f, m, f_m, hi, f_hi, depth - 1, out);
}

}  // namespace

std::vector<Bracket> bracket_roots_on_grid(const ScalarFn& f,
                                           const std::vector<double>& grid,
                                           int max_depth) {
  if (grid.size() < 2) throw std::invalid_argument("bracket_roots: grid too small");
  std::vector<double> vals(grid.size());
  eval_on_grid([&](double x) { return f(x); }, grid, vals);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(vals[i]))
      throw EvaluationError("non-finite probe value", grid[i]);
    if (vals[i] == 0.0) {
      // Nudge exact zeros off the node so every bracket is a strict
      // sign change.
      double x = grid[i] * (1.0 + 1e-14) + 1e-300;
      vals[i] = f(x);
    }
  }

  std::vector<Bracket> out;
  std::vector<char> cell_has_root(grid.size() - 1, 0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (sign_change(vals[i], vals[i + 1])) {
      out.push_back(Bracket{grid[i], grid[i + 1], vals[i], vals[i + 1]});
      cell_has_root[i] = 1;
    }
  }

  // Interior nodes that are strict local minima of |f| with no sign
  // change on either side get a deeper look.
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (cell_has_root[i - 1] || cell_has_root[i]) continue;
    double a = std::abs(vals[i - 1]), b = std::abs(vals[i]), c = std::abs(vals[i + 1]);
    if (b < a && b < c) {
      probe_dip(f, grid[i - 1], vals[i - 1], grid[i], vals[i], max_depth, out);
      probe_dip(f, grid[i], vals[i], grid[i + 1], vals[i + 1], max_depth, out);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
  return out;
}

std::vector<Bracket> bracket_roots(const ScalarFn& f, double lo, double hi,
                                   int initial_cells, int max_depth) {
  if (!(lo < hi)) throw std::invalid_argument("bracket_roots: lo >= hi");
  if (initial_cells < 8) throw std::invalid_argument("bracket_roots: cells < 8");
  return bracket_roots_on_grid(f, uniform_grid(lo, hi, initial_cells), max_depth);
}

RefinedRoot refine_root(const ScalarFn& f, const Bracket& bracket,
                        double tol_x, double tol_f) {
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (!(a < b) || !sign_change(fa, fb))
    throw std::invalid_argument("refine_root: invalid bracket");

  double best_x = std::abs(fa) < std::abs(fb) ? a : b;
  double best_f = std::min(std::abs(fa), std::abs(fb));
  for (int it = 0; it < 200; ++it) {
    if (best_f <= tol_f) return RefinedRoot{best_x, best_f};
    double width = b - a;
    if (width <= tol_x * std::max(1.0, std::abs(a))) {
      if (best_f > 1e4 * tol_f) throw FoldSuspectedError(best_x);
      return RefinedRoot{best_x, best_f};
    }
    // Secant step, clipped into the bracket interior; bisection fallback.
    double m = a - fa * (b - a) / (fb - fa);
    double margin = 0.01 * width;
    if (!(m > a + margin) || !(m < b - margin)) m = 0.5 * (a + b);
    double fm = f(m);
    if (!std::isfinite(fm)) throw EvaluationError("non-finite refine value", m);
    if (std::abs(fm) < best_f) { best_f = std::abs(fm); best_x = m; }
    if (fm == 0.0) return RefinedRoot{m, 0.0};
    if (sign_change(fa, fm)) { b = m; fb = fm; }
    else { a = m; fa = fm; }
  }
  throw ConvergenceError("refine_root: iteration cap exceeded", best_x, best_f);
}

namespace {

std::vector<double> fold_scan_grid(double lo, double hi) {
  std::vector<double> grid;
  if (hi > 0.9 && lo < 0.5) {
    grid = unit_interval_scan_grid(2048, lo, std::max(1.0 - hi, 1e-9));
  } else {
    grid = uniform_grid(lo, hi, 2048);
  }
  std::erase_if(grid, [&](double x) { return x < lo || x > hi; });
  if (grid.empty() || grid.front() > lo) grid.insert(grid.begin(), lo);
  if (grid.back() < hi) grid.push_back(hi);
  return grid;
}

}  // namespace

FoldPoint find_fold(double epsilon, int n, double lo, double hi) {
  if (n < 3) throw std::domain_error("find_fold: n must be >= 3");
  if (!(lo > 0.0 && lo < hi)) throw std::invalid_argument("find_fold: bad interval");
  const AngleTable table(n);
  const bool symmetric = epsilon == 1.0;

  // Map an interval above 1 to (0, 1) via t = 1/x; h(1/t) has critical
  // points exactly at the reciprocals.
  bool mapped = false;
  if (lo >= 1.0) {
    double new_lo = 1.0 / hi, new_hi = 1.0 / lo;
    lo = std::max(new_lo, 1e-9);
    hi = std::min(new_hi, 1.0 - 1e-9);
    mapped = true;
  } else if (hi > 1.0 && !symmetric) {
    throw std::invalid_argument("find_fold: interval must avoid x = 1 for eps != 1");
  }

  double scan_lo = lo, scan_hi = hi;
  if (symmetric) {
    // h = h0 is smooth through 1 and symmetric under x -> 1/x; the fold
    // sits at x = 1 itself, so stretch the scan across it.
    if (scan_hi <= 1.0) scan_hi = std::min(1.0 / scan_lo, 2.0);
  } else {
    scan_hi = std::min(scan_hi, 1.0 - 1e-9);
  }

  auto x_of = [&](double t) { return mapped ? 1.0 / t : t; };
  auto hval = [&](double t) {
    double x = x_of(t);
    return symmetric ? h0(x, n, table) : h_split(x, epsilon, n, table).h;
  };
  auto dh = [&](double t) {
    double x = x_of(t);
    double d = symmetric ? dh0_dx(x, n, table) : dh_dx(x, epsilon, n, table);
    return mapped ? -d / (t * t) : d;
  };

  std::vector<double> grid = symmetric ? uniform_grid(scan_lo, scan_hi, 4096)
                                       : fold_scan_grid(scan_lo, scan_hi);
  std::vector<Bracket> brackets = bracket_roots_on_grid(dh, grid);
  if (brackets.empty()) throw FoldNotFoundError();

  bool found = false;
  double best_t = 0.0, best_mu = -std::numeric_limits<double>::infinity();
  for (const Bracket& br : brackets) {
    if (!(br.f_lo > 0.0 && br.f_hi < 0.0)) continue;  // maxima only
    RefinedRoot r = refine_root(dh, br, 1e-14, 1e-13);
    double mu0 = hval(r.x);
    if (!found || mu0 > best_mu) { found = true; best_t = r.x; best_mu = mu0; }
  }
  if (!found) throw FoldNotFoundError();

  double x_star = x_of(best_t);
  double res_f = std::abs(F_eval(x_star, n, epsilon, best_mu, table));
  double res_df = std::abs(dF_dx_eval(x_star, n, epsilon, best_mu, table));
  // Non-degeneracy: second derivative of h at the fold via central
  // differences of the analytic first derivative.
  double step = 1e-5 * std::max(1.0, std::abs(best_t));
  double h2nd = (dh(best_t + step) - dh(best_t - step)) / (2.0 * step);
  return FoldPoint{x_star, best_mu, epsilon, n, res_f, res_df,
                   std::abs(h2nd) > 1e-6};
}

}  // namespace rosette
