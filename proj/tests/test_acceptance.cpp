// Acceptance suite: one printed pass/fail line per criterion, exit 1 if
// any fail. Tolerances are pinned here on purpose; reference values come
// from the published tables this project reproduces, with two known
// discrepancies (criteria 2 and 7) documented in the README.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rosette/bifurcation.hpp"
#include "rosette/grid.hpp"
#include "rosette/nbody.hpp"
#include "rosette/potential.hpp"
#include "rosette/rootfind.hpp"

using namespace rosette;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, title,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Roots accumulated from criteria 5-8 for the oracle pass (criterion 9).
std::vector<std::pair<double, RosetteParams>> certified;

void collect(const CountResult& r) {
  for (const Root& root : r.roots.roots) certified.emplace_back(root.x, r.params);
}

void criterion_1() {
  bool pass = std::abs(A_n(2) - (1.0 - 2.0 * std::sqrt(2.0)) / 4.0) < 1e-12;
  for (int n = 2; n <= 1000; ++n) pass = pass && A_n(n) < 0.0;
  report(1, "A_n < 0 for n = 2..1000; A_2 closed form to 1e-12", pass);
}

void criterion_2() {
  bool bound = true, increasing = true;
  double prev = -1.0;
  for (int n = 3; n <= 1000; ++n) {
    double v = k_n_lower(n);
    bound = bound && k_n(n) > v;
    increasing = increasing && v > prev;
    prev = v;
  }
  double k107 = k_n_lower(107);
  bool printed_value = std::abs(k107 - 0.7514096544) < 1e-9;
  report(2, "trapezoid bound: k_n > k_n^- and k_n^- increasing, n = 3..1000; "
            "k_107^- matches the printed reference to 1e-9",
         bound && increasing && printed_value,
         "computed k_107^- = " + num(k107) + ", reference 0.7514096544; the "
         "bound and monotonicity checks " +
             (bound && increasing ? "hold" : "FAIL"));
}

void criterion_3() {
  LemmaMainResult r = verify_lemma_main(4, 106);
  bool pass = r.report.pass && r.rows.size() == 103;
  report(3, "h1 root x_n* in (0.54, 1) with h0(x_n*) > 0 for n = 4..106", pass,
         "worst margin " + num(r.report.worst_margin) + " at " +
             r.report.worst_location);
}

void criterion_4() {
  double k107 = k_n_lower(107);
  bool chain = 107.0 * (k107 - 0.75) > 0.0;
  bool a107 = std::abs(h1_tilde(1.0, 107) - A_n(107)) < 1e-12 && A_n(107) < 0.0;
  const AngleTable table(107);
  int samples = 0;
  bool h3pos = true;
  for (int i = 0; i < 4600; ++i) {
    double x = 0.54 + 1e-4 * (i + 0.5);
    h3pos = h3pos && bound_functions(x, 107, table).h3 > 0.0;
    ++samples;
  }
  report(4, "large-n chain at n = 107: n(k_n^- - 0.75) > 0, h1_tilde(1) = A_n < 0, "
            "h3 > 0 on (0.54, 1)",
         chain && a107 && h3pos && samples >= 4600,
         std::to_string(samples) + " h3 samples");
}

void criterion_5() {
  bool counts = true;
  for (int n = 3; n <= 8; ++n) {
    double muc = mu_c(n);
    for (double f : {0.25, 0.5}) {
      CountResult r = count_configurations(RosetteParams(n, 1.0, f * muc));
      counts = counts && r.count == 3;
      collect(r);
    }
    for (double f : {2.0, 10.0}) {
      CountResult r = count_configurations(RosetteParams(n, 1.0, f * muc));
      counts = counts && r.count == 1;
      collect(r);
    }
  }
  FoldPoint fp = find_fold(1.0, 3, 1e-3, 1.0 - 1e-9);
  double closed = 7.0 / 12.0 - std::sqrt(3.0) / 3.0;
  bool fold = std::abs(fp.mu0 - closed) < 1e-8;
  report(5, "symmetric counts 3/1 across mu_c for n = 3..8; fold solver "
            "recovers mu_c(3) to 1e-8",
         counts && fold, "fold mu0 = " + num(fp.mu0));
}

void criterion_6() {
  bool pass = true;
  std::string first_fail;
  for (int n : {4, 5, 10}) {
    for (double eps : uniform_grid(0.05, 0.95, 19)) {
      try {
        FoldPoint fp = find_fold(eps, n, 1e-4, 1.0 - 1e-9);
        int below = count_configurations(
                        RosetteParams(n, eps, fp.mu0 * (1.0 - 1e-3))).count;
        int above = count_configurations(
                        RosetteParams(n, eps, fp.mu0 * (1.0 + 1e-3))).count;
        bool ok = fp.mu0 > 0.0 && below - above == 2;
        if (!ok && first_fail.empty())
          first_fail = "n=" + std::to_string(n) + " eps=" + num(eps) +
                       " mu0=" + num(fp.mu0) + " counts " +
                       std::to_string(below) + "/" + std::to_string(above);
        pass = pass && ok;
      } catch (const std::exception& e) {
        pass = false;
        if (first_fail.empty())
          first_fail = "n=" + std::to_string(n) + " eps=" + num(eps) + ": " + e.what();
      }
    }
  }
  report(6, "fold with mu0 > 0 on a 20-point eps grid for n = 4, 5, 10; "
            "count drops by 2 across mu0",
         pass, first_fail);
}

void criterion_7() {
  std::vector<double> grid = log_grid(1e-5, 1.0 - 1e-5, 32);
  HmaxCurve c = scan_hmax_n3(grid);
  bool eps_match = std::abs(c.eps1 - 0.00076760883) < 1e-6 &&
                   std::abs(c.eps2 - 0.97198893434) < 1e-6;

  const AngleTable t3(3);
  auto f = [&](double x) { return h1(x, 3, t3); };
  std::vector<Bracket> bs = bracket_roots(f, 0.54, 1.0 - 1e-6, 512);
  bool star = false;
  double x3 = 0.0, h0v = 0.0;
  if (bs.size() == 1) {
    x3 = refine_root(f, bs[0]).x;
    h0v = h0(x3, 3, t3);
    star = std::abs(x3 - 0.617364) < 1e-5 && std::abs(h0v - (-0.188154)) < 1e-5;
  }

  bool band = true;
  for (double eps : {0.1, 0.5, 0.9})
    for (double mu : {0.01, 1.0, 100.0}) {
      CountResult r = count_configurations(RosetteParams(3, eps, mu));
      band = band && r.count == 1;
      collect(r);
    }

  // Reference says eps = 0.98 sits above eps2 and admits three
  // configurations for small mu below the inner maximum of h.
  HmaxPoint hm98 = hmax_over_unit_interval(0.98, 3);
  bool three_at_098 = false;
  if (hm98.hmax > 0.0) {
    CountResult r = count_configurations(RosetteParams(3, 0.98, hm98.hmax / 2.0));
    three_at_098 = r.count == 3;
    if (three_at_098) collect(r);
  }

  report(7, "n = 3 study: eps1/eps2 to 1e-6, x_3* and h0(x_3*) to 1e-5, one "
            "configuration inside the band, three at eps = 0.98",
         eps_match && star && band && three_at_098,
         "computed eps1 = " + num(c.eps1) + " eps2 = " + num(c.eps2) +
             " (note 1-eps2 = " + num(1.0 - c.eps2) + ", 1-eps1 = " +
             num(1.0 - c.eps1) + "); x_3* = " + num(x3) + ", h0 = " + num(h0v) +
             "; hmax(0.98) = " + num(hm98.hmax));
}

void criterion_8() {
  bool pass = true;
  for (double mu : {0.1, 0.5, 1.0, 1.74, 1.76, 5.0})
    for (double eps : {0.05, 0.3, 0.6, 0.85, 0.9, 0.99}) {
      CountResult r = count_configurations(RosetteParams(2, eps, mu));
      pass = pass && r.count == 1;
      collect(r);
    }
  report(8, "n = 2 uniqueness across the 36-point (mu, eps) grid", pass);
}

void criterion_9() {
  double worst = 0.0;
  for (const auto& [x, params] : certified)
    worst = std::max(worst, check_central(x, params).max_relative_residual);
  RosetteParams off(5, 0.5, 1.0);
  bool control = std::abs(F(0.5, off)) > 1e-6 &&
                 check_central(0.5, off).max_relative_residual > 1e-3;
  report(9, "oracle: every root from criteria 5-8 certifies to 1e-9; "
            "off-root control exceeds 1e-3",
         worst < 1e-9 && control,
         std::to_string(certified.size()) + " roots, worst residual " + num(worst));
}

void criterion_10() {
  bool pass = true;
  for (int n : {3, 5})
    for (double eps : {0.2, 0.7})
      for (double mu : {0.01, 1.0}) {
        // mu transforms to mu/eps = mu * eps_new (the reference mass
        // changes with the polygon swap); see README on this convention.
        CountResult a = count_configurations(RosetteParams(n, eps, mu));
        CountResult b = count_configurations(RosetteParams(n, 1.0 / eps, mu / eps));
        if (a.count != b.count) { pass = false; continue; }
        for (int i = 0; i < a.count; ++i) {
          double x = a.roots.roots[static_cast<std::size_t>(i)].x;
          double y = b.roots.roots[static_cast<std::size_t>(b.count - 1 - i)].x;
          pass = pass && std::abs(x - 1.0 / y) < 1e-9 * std::max(1.0, x);
        }
      }
  report(10, "duality: root sets of (eps, mu) and (1/eps, mu/eps) are "
             "reciprocal bijections to 1e-9",
         pass);
}

void criterion_11() {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> ux(0.05, 3.0);
  std::uniform_real_distribution<double> ue(0.1, 2.0);
  std::uniform_real_distribution<double> um(0.0, 5.0);
  std::uniform_int_distribution<int> un(2, 10);
  const double step = 1e-6;
  bool pass = true;
  int done = 0;
  while (done < 100) {
    double x = ux(rng);
    if (std::abs(x - 1.0) < 0.02) continue;
    int n = un(rng);
    double eps = ue(rng), mu = um(rng);
    const AngleTable table(n);

    double fdF = (F_eval(x + step, n, eps, mu, table) -
                  F_eval(x - step, n, eps, mu, table)) / (2.0 * step);
    double aF = dF_dx_eval(x, n, eps, mu, table);
    pass = pass && std::abs(aF - fdF) <= 1e-6 * std::max(1.0, std::abs(fdF));

    double fdH = (h_split(x + step, eps, n, table).h -
                  h_split(x - step, eps, n, table).h) / (2.0 * step);
    double aH = dh_dx(x, eps, n, table);
    pass = pass && std::abs(aH - fdH) <= 1e-6 * std::max(1.0, std::abs(fdH));

    RosetteParams p(n, eps, mu);
    PlanarConfiguration c = build_configuration(x, p, 1.0);
    NewtonianEval e = newtonian_serial(c);
    for (int d = 0; d < 2; ++d) {
      PlanarConfiguration hi = c, lo = c;
      hi.positions[1][d] += step;
      lo.positions[1][d] -= step;
      double fd = (newtonian_serial(hi).U - newtonian_serial(lo).U) / (2.0 * step);
      pass = pass && std::abs(e.gradient[1][d] - fd) <=
                         1e-6 * std::max(1.0, std::abs(fd));
    }
    ++done;
  }
  report(11, "analytic dF/dx, dh/dx, and the n-body gradient match finite "
             "differences at 100 random samples",
         pass);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
