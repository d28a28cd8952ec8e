#include "rosette/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rosette/grid.hpp"
#include "rosette/potential.hpp"

namespace rosette {

namespace {

double newton_polish(double x0, int n, double eps, double mu,
                     const AngleTable& table) {
  double x = x0;
  for (int it = 0; it < 12; ++it) {
    double f = F_eval(x, n, eps, mu, table);
    if (std::abs(f) < 1e-13 * std::max(1.0, mu)) break;
    double df = dF_dx_eval(x, n, eps, mu, table);
    if (df == 0.0) break;
    double step = f / df;
    if (!std::isfinite(step) || std::abs(step) > 0.5 * x) break;
    x -= step;
  }
  return x;
}

// Roots of F on one side of the pole. For the side above 1 the scan runs
// in t = 1/x and brackets are mapped back before refinement.
void scan_side(int n, double eps, double mu, const AngleTable& table,
               const CountOptions& opts, bool above_one, std::vector<Root>& out) {
  const double norm = std::max(1.0, mu);
  auto fnorm = [&](double x) { return F_eval(x, n, eps, mu, table) / norm; };

  double lo = above_one ? 1.0 / opts.x_max : opts.x_min;
  std::vector<double> grid = unit_interval_scan_grid(opts.cells, lo, opts.pole_gap);

  std::vector<Bracket> brackets;
  if (above_one) {
    auto g = [&](double t) { return fnorm(1.0 / t); };
    for (const Bracket& b : bracket_roots_on_grid(g, grid))
      brackets.push_back(Bracket{1.0 / b.hi, 1.0 / b.lo, b.f_hi, b.f_lo});
    std::sort(brackets.begin(), brackets.end(),
              [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
  } else {
    brackets = bracket_roots_on_grid(fnorm, grid);
  }

  for (const Bracket& b : brackets) {
    RefinedRoot r = refine_root(fnorm, b, kDefaultTolX, 1e-12);
    double x = newton_polish(r.x, n, eps, mu, table);
    double res = std::abs(fnorm(x));
    out.push_back(Root{x, res,
                       above_one ? IntervalTag::above_one : IntervalTag::below_one});
  }
}

void sort_dedupe(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.x < b.x; });
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const Root& a, const Root& b) {
                            return std::abs(a.x - b.x) <
                                   1e-10 * std::max(1.0, std::abs(b.x));
                          }),
              roots.end());
}

}  // namespace

CountResult count_configurations(const RosetteParams& params,
                                 const CountOptions& opts) {
  if (params.epsilon > 1.0) {
    CountResult dual_res = count_configurations(params.dual(), opts);
    const AngleTable table(params.n);
    const double norm = std::max(1.0, params.mu);
    std::vector<Root> roots;
    for (const Root& r : dual_res.roots.roots) {
      if (r.interval == IntervalTag::at_one) {
        roots.push_back(r);
        continue;
      }
      double x = newton_polish(1.0 / r.x, params.n, params.epsilon, params.mu, table);
      double res = std::abs(F_eval(x, params.n, params.epsilon, params.mu, table)) / norm;
      roots.push_back(Root{x, res,
                           r.interval == IntervalTag::below_one
                               ? IntervalTag::above_one
                               : IntervalTag::below_one});
    }
    sort_dedupe(roots);
    RootSet rs{roots, params, dual_res.roots.grid_resolution};
    return CountResult{params, static_cast<int>(roots.size()), std::move(rs), true};
  }

  const AngleTable table(params.n);
  std::vector<Root> roots;
  scan_side(params.n, params.epsilon, params.mu, table, opts, false, roots);
  scan_side(params.n, params.epsilon, params.mu, table, opts, true, roots);
  if (params.epsilon == 1.0) {
    // F(1, 1, mu) = 0 for every mu: the symmetric configuration.
    double res = std::abs(F_eval(1.0, params.n, 1.0, params.mu, table)) /
                 std::max(1.0, params.mu);
    roots.push_back(Root{1.0, res, IntervalTag::at_one});
  }
  sort_dedupe(roots);
  RootSet rs{roots, params, 1.0 / opts.cells};
  return CountResult{params, static_cast<int>(roots.size()), std::move(rs), false};
}

std::vector<FoldCurvePoint> bifurcation_curve(int n,
                                              const std::vector<double>& epsilon_grid) {
  std::vector<FoldCurvePoint> out;
  std::vector<char> found(epsilon_grid.size(), 0);
  std::vector<FoldCurvePoint> slots(epsilon_grid.size());
  const long long m = static_cast<long long>(epsilon_grid.size());
#pragma omp parallel for schedule(dynamic) if (worker_threads() != 1)
  for (long long i = 0; i < m; ++i) {
    double eps = epsilon_grid[static_cast<std::size_t>(i)];
    try {
      FoldPoint fp = find_fold(eps, n, 1e-4, 1.0 - 1e-9);
      if (fp.mu0 > 0.0) {
        slots[static_cast<std::size_t>(i)] = FoldCurvePoint{eps, fp.mu0, fp.x_star};
        found[static_cast<std::size_t>(i)] = 1;
      }
    } catch (const FoldNotFoundError&) {
      // h monotone for this epsilon (the n = 3 middle band); recorded as
      // an absent entry.
    }
  }
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (found[i]) out.push_back(slots[i]);
  return out;
}

HmaxPoint hmax_over_unit_interval(double epsilon, int n, double x_grid_resolution) {
  const AngleTable table(n);
  int cells = std::max(16, static_cast<int>(std::lround(1.0 / x_grid_resolution)));
  std::vector<double> grid =
      uniform_grid(x_grid_resolution, 1.0 - 1e-9, cells);
  std::vector<double> vals(grid.size());
  eval_on_grid([&](double x) { return h_split(x, epsilon, n, table).h; }, grid, vals);

  std::size_t best = 0;
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i] > vals[best]) best = i;

  double hmax = vals[best];
  double argmax = grid[best];
  if (best > 0 && best + 1 < grid.size()) {
    double a = grid[best - 1], b = grid[best + 1];
    double da = dh_dx(a, epsilon, n, table), db = dh_dx(b, epsilon, n, table);
    if (da > 0.0 && db < 0.0) {
      for (int it = 0; it < 60 && (b - a) > 1e-12; ++it) {
        double m = 0.5 * (a + b);
        double dm = dh_dx(m, epsilon, n, table);
        if (dm > 0.0) a = m; else b = m;
      }
      double xm = 0.5 * (a + b);
      double hm = h_split(xm, epsilon, n, table).h;
      if (hm > hmax) { hmax = hm; argmax = xm; }
    }
  }
  return HmaxPoint{hmax, argmax};
}

HmaxCurve scan_hmax_n3(const std::vector<double>& epsilon_grid,
                       double x_grid_resolution) {
  HmaxCurve curve;
  curve.epsilon_grid = epsilon_grid;
  curve.hmax_values.resize(epsilon_grid.size());
  curve.argmax_x.resize(epsilon_grid.size());
  const long long m = static_cast<long long>(epsilon_grid.size());
#pragma omp parallel for schedule(dynamic) if (worker_threads() != 1)
  for (long long i = 0; i < m; ++i) {
    HmaxPoint p = hmax_over_unit_interval(epsilon_grid[static_cast<std::size_t>(i)], 3,
                                          x_grid_resolution);
    curve.hmax_values[static_cast<std::size_t>(i)] = p.hmax;
    curve.argmax_x[static_cast<std::size_t>(i)] = p.argmax;
  }

  auto hm_at = [&](double e) { return hmax_over_unit_interval(e, 3, x_grid_resolution).hmax; };
  auto bisect_eps = [&](double a, double b) {
    double fa = hm_at(a);
    for (int it = 0; it < 60 && (b - a) > 1e-10; ++it) {
      double m2 = 0.5 * (a + b);
      double fm = hm_at(m2);
      if ((fa > 0.0) == (fm > 0.0)) { a = m2; fa = fm; }
      else b = m2;
    }
    return 0.5 * (a + b);
  };
  curve.eps1 = bisect_eps(1e-5, 0.5);         // hmax > 0 near 0, < 0 at 0.5
  curve.eps2 = bisect_eps(0.5, 1.0 - 1e-8);   // hmax < 0 at 0.5, > 0 near 1
  return curve;
}

const char* lemma_id_name(LemmaId id) {
  switch (id) {
    case LemmaId::A_n_negative: return "A_n_negative";
    case LemmaId::kn_lower_bound: return "kn_lower_bound";
    case LemmaId::lemma_main_smalln: return "lemma_main_smalln";
    case LemmaId::lemma_main_largen: return "lemma_main_largen";
    case LemmaId::h3_positive: return "h3_positive";
    case LemmaId::n2_unique: return "n2_unique";
    case LemmaId::theorem2_counts: return "theorem2_counts";
    case LemmaId::n3_monotone: return "n3_monotone";
    case LemmaId::n3_hmax_band: return "n3_hmax_band";
  }
  return "unknown";
}

namespace {

struct MarginTracker {
  double worst = std::numeric_limits<double>::infinity();
  std::string where;

  void note(double margin, const std::string& loc) {
    if (margin < worst) { worst = margin; where = loc; }
  }
};

std::string loc(const char* what, int n) {
  std::ostringstream os;
  os << what << " at n=" << n;
  return os.str();
}

}  // namespace

LemmaMainResult verify_lemma_main(int n_lo, int n_hi) {
  if (n_lo < 3 || n_lo > n_hi)
    throw std::domain_error("verify_lemma_main: need 3 <= n_lo <= n_hi");
  LemmaMainResult result;
  MarginTracker mt;
  for (int n = n_lo; n <= n_hi; ++n) {
    const AngleTable table(n);
    auto t = [&](double x) { return h1_tilde(x, n, table); };
    std::vector<Bracket> brackets = bracket_roots(t, 0.54, 1.0, 64);
    if (brackets.empty()) {
      mt.note(-1.0, loc("no h1 root in (0.54, 1)", n));
      continue;
    }
    RefinedRoot r = refine_root(t, brackets.front());
    double h0v = h0(r.x, n, table);
    result.rows.push_back(Fig2Row{n, r.x, h0v});
    if (n == 3) continue;  // documented exception: h0(x_3*) < 0
    mt.note(r.x - 0.54, loc("x* - 0.54", n));
    mt.note(1.0 - r.x, loc("1 - x*", n));
    mt.note(h0v, loc("h0(x*)", n));
    if (n >= 107) {
      double bound = n * (k_n_lower(n) - 0.75);
      mt.note(bound, loc("n(k_n^- - 3/4)", n));
      mt.note(h1_tilde(0.54, n, table) - bound, loc("h1_tilde(0.54) - bound", n));
      mt.note(-A_n(n), loc("-A_n", n));
    }
  }
  bool has_large = n_hi >= 107;
  if (has_large) {
    LemmaReport h3rep = verify_h3_positive(107);
    mt.note(h3rep.worst_margin, h3rep.worst_location);
  }
  result.report = LemmaReport{
      has_large ? LemmaId::lemma_main_largen : LemmaId::lemma_main_smalln,
      n_lo, n_hi, mt.worst > 0.0, mt.worst, mt.where};
  return result;
}

LemmaReport verify_A_n_negative(int n_lo, int n_hi) {
  MarginTracker mt;
  for (int n = n_lo; n <= n_hi; ++n) mt.note(-A_n(n), loc("-A_n", n));
  return LemmaReport{LemmaId::A_n_negative, n_lo, n_hi, mt.worst > 0.0,
                     mt.worst, mt.where};
}

LemmaReport verify_kn_lower(int n_lo, int n_hi) {
  MarginTracker mt;
  for (int n = n_lo; n <= n_hi; ++n) {
    mt.note(k_n(n) - k_n_lower(n), loc("k_n - k_n^-", n));
    if (n > n_lo)
      mt.note(k_n_lower(n) - k_n_lower(n - 1), loc("k_n^- increment", n));
  }
  return LemmaReport{LemmaId::kn_lower_bound, n_lo, n_hi, mt.worst > 0.0,
                     mt.worst, mt.where};
}

LemmaReport verify_h3_positive(int n, double step) {
  const AngleTable table(n);
  MarginTracker mt;
  for (double x = 0.54 + step; x < 1.0; x += step) {
    BoundBreakdown b = bound_functions(x, n, table);
    if (b.h3 < mt.worst) {
      std::ostringstream os;
      os << "h3 at x=" << x;
      mt.note(b.h3, os.str());
    }
  }
  return LemmaReport{LemmaId::h3_positive, n, n, mt.worst > 0.0, mt.worst, mt.where};
}

LemmaReport verify_theorem2(int n_lo, int n_hi) {
  MarginTracker mt;
  for (int n = n_lo; n <= n_hi; ++n) {
    double muc = mu_c(n);
    const double factors[] = {0.25, 0.5, 2.0, 10.0};
    const int expected[] = {3, 3, 1, 1};
    for (int i = 0; i < 4; ++i) {
      CountResult c = count_configurations(RosetteParams(n, 1.0, muc * factors[i]));
      std::ostringstream os;
      os << "count(n=" << n << ", mu=" << factors[i] << "*mu_c) = " << c.count
         << ", expected " << expected[i];
      mt.note(c.count == expected[i] ? 1.0 : -std::abs(c.count - expected[i]),
              os.str());
    }
  }
  return LemmaReport{LemmaId::theorem2_counts, n_lo, n_hi, mt.worst > 0.0,
                     mt.worst, mt.where};
}

LemmaReport verify_n2_unique(const std::vector<double>& mus,
                             const std::vector<double>& epsilons) {
  MarginTracker mt;
  for (double mu : mus) {
    for (double eps : epsilons) {
      CountResult c = count_configurations(RosetteParams(2, eps, mu));
      std::ostringstream os;
      os << "count(n=2, eps=" << eps << ", mu=" << mu << ") = " << c.count;
      mt.note(c.count == 1 ? 1.0 : -std::abs(c.count - 1), os.str());
    }
  }
  return LemmaReport{LemmaId::n2_unique, 2, 2, mt.worst > 0.0, mt.worst, mt.where};
}

LemmaReport verify_n3_monotone_above_one() {
  const AngleTable table(3);
  MarginTracker mt;
  std::vector<double> xs = log_grid(1.0 + 1e-6, 1e3, 256);
  for (double x : xs) {
    mt.note(-dh0_dx(x, 3, table), loc("-h0' at x>1", 3));
    mt.note(-(dh0_dx(x, 3, table) + dh1_dx(x, 3, table)), loc("-(h0'+h1')", 3));
    for (double eps = 0.05; eps < 1.0; eps += 0.05) {
      double d = dh_dx(x, eps, 3, table);
      if (-d < mt.worst) {
        std::ostringstream os;
        os << "-dh/dx at x=" << x << ", eps=" << eps;
        mt.note(-d, os.str());
      }
    }
  }
  return LemmaReport{LemmaId::n3_monotone, 3, 3, mt.worst > 0.0, mt.worst, mt.where};
}

}  // namespace rosette
