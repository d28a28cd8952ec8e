#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rosette/params.hpp"
#include "rosette/rootfind.hpp"

namespace rosette {

struct CountResult {
  RosetteParams params;
  int count;
  RootSet roots;
  bool used_duality;  // eps > 1 was mapped to 1/eps
};

struct CountOptions {
  int cells = 2048;
  double x_min = 1e-6;
  double x_max = 1e6;
  double pole_gap = 1e-9;
};

// Enumerates the rosette central configurations for (n, eps, mu).
// eps > 1 is mapped through the duality (x, eps, mu) -> (1/x, 1/eps,
// mu/eps) and the roots mapped back as reciprocals; eps = 1 injects the
// symmetric x = 1 root and counts roots of mu = h0 elsewhere.
CountResult count_configurations(const RosetteParams& params,
                                 const CountOptions& opts = {});

struct FoldCurvePoint {
  double epsilon;
  double mu0;
  double x_star;
};

// Folds of mu = h(x, eps) on (0, 1) along an epsilon grid. Entries are
// emitted only where a fold with mu0 > 0 exists (negative-mu folds are
// unreachable for a mass ratio); per-epsilon not-found results are
// silently skipped, matching the n = 3 middle band.
std::vector<FoldCurvePoint> bifurcation_curve(int n,
                                              const std::vector<double>& epsilon_grid);

enum class LemmaId {
  A_n_negative,
  kn_lower_bound,
  lemma_main_smalln,
  lemma_main_largen,
  h3_positive,
  n2_unique,
  theorem2_counts,
  n3_monotone,
  n3_hmax_band,
};

const char* lemma_id_name(LemmaId id);

struct LemmaReport {
  LemmaId lemma_id;
  int n_lo;
  int n_hi;
  bool pass;
  double worst_margin;
  std::string worst_location;
};

struct HmaxCurve {
  std::vector<double> epsilon_grid;
  std::vector<double> hmax_values;
  std::vector<double> argmax_x;
  double eps1;
  double eps2;
};

// Maximum of h(x, eps) over x in (0, 1) for n = 3, along an epsilon
// grid; locates the sign-change abscissas eps1 < eps2 of hmax by
// bisection on eps.
HmaxCurve scan_hmax_n3(const std::vector<double>& epsilon_grid,
                       double x_grid_resolution = 1e-4);

// Single-epsilon inner maximization (n = 3 unless stated otherwise).
struct HmaxPoint {
  double hmax;
  double argmax;
};
HmaxPoint hmax_over_unit_interval(double epsilon, int n,
                                  double x_grid_resolution = 1e-4);

struct Fig2Row {
  int n;
  double x_star;
  double h0_at_root;
};

struct LemmaMainResult {
  LemmaReport report;
  std::vector<Fig2Row> rows;
};

// Root x_n* of h1 in (0.54, 1) with h0(x_n*) > 0 for each n in range;
// for n >= 107 also checks the analytic chain (k_n^- bound, sign of
// A_n, positivity of h3). n = 3 is the documented exception: its row is
// emitted but h0(x_3*) < 0 does not fail the report.
LemmaMainResult verify_lemma_main(int n_lo, int n_hi);

LemmaReport verify_A_n_negative(int n_lo = 2, int n_hi = 1000);
LemmaReport verify_kn_lower(int n_lo = 3, int n_hi = 1000);
LemmaReport verify_h3_positive(int n = 107, double step = 1e-4);
LemmaReport verify_theorem2(int n_lo = 3, int n_hi = 8);
LemmaReport verify_n2_unique(const std::vector<double>& mus,
                             const std::vector<double>& epsilons);
LemmaReport verify_n3_monotone_above_one();

}  // namespace rosette
