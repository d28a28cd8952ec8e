#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rosette/bifurcation.hpp"
#include "rosette/grid.hpp"
#include "rosette/potential.hpp"

using namespace rosette;

TEST_CASE("count invariants and basic counts") {
  SUBCASE("n = 2 is always unique") {
    for (double mu : {0.1, 1.0, 1.75, 3.0})
      for (double eps : {0.1, 0.5, 0.9}) {
        CountResult r = count_configurations(RosetteParams(2, eps, mu));
        CHECK(r.count == 1);
        CHECK(r.count == static_cast<int>(r.roots.roots.size()));
      }
  }

  SUBCASE("symmetric case straddles the critical mass") {
    for (int n = 3; n <= 6; ++n) {
      double muc = mu_c(n);
      CHECK(count_configurations(RosetteParams(n, 1.0, muc / 2.0)).count == 3);
      CHECK(count_configurations(RosetteParams(n, 1.0, 2.0 * muc)).count == 1);
    }
  }

  SUBCASE("small and large central mass, n = 5") {
    CountResult lo = count_configurations(RosetteParams(5, 0.3, 1e-3));
    CHECK(lo.count >= 3);
    int below = 0, above = 0;
    for (const Root& r : lo.roots.roots)
      (r.interval == IntervalTag::below_one ? below : above)++;
    CHECK(below >= 2);
    CHECK(above >= 1);
    CHECK(count_configurations(RosetteParams(5, 0.3, 1e3)).count == 1);
  }

  SUBCASE("root sets are ordered, residual-checked, away from the pole") {
    CountResult r = count_configurations(RosetteParams(4, 0.4, 0.01));
    for (std::size_t i = 0; i < r.roots.roots.size(); ++i) {
      const Root& root = r.roots.roots[i];
      CHECK(root.residual < 1e-10);
      CHECK(std::abs(root.x - 1.0) > 1e-9);
      if (i > 0) CHECK(root.x > r.roots.roots[i - 1].x);
    }
  }
}

TEST_CASE("duality round-trip on root sets") {
  for (int n : {3, 5}) {
    for (double eps : {0.2, 0.7}) {
      for (double mu : {0.01, 1.0}) {
        // The polygon swap re-expresses the central mass against the new
        // reference polygon: the partner of (eps, mu) is (1/eps, mu/eps).
        CountResult a = count_configurations(RosetteParams(n, eps, mu));
        CountResult b = count_configurations(RosetteParams(n, 1.0 / eps, mu / eps));
        CHECK(b.used_duality);
        REQUIRE(a.count == b.count);
        std::vector<double> recip;
        for (const Root& r : b.roots.roots) recip.push_back(1.0 / r.x);
        std::sort(recip.begin(), recip.end());
        for (int i = 0; i < a.count; ++i)
          CHECK(a.roots.roots[static_cast<std::size_t>(i)].x ==
                doctest::Approx(recip[static_cast<std::size_t>(i)]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("monotone tail: h flattens to -n k_n") {
  for (int n = 3; n <= 20; ++n)
    for (double eps : {0.1, 0.5, 0.9})
      CHECK(std::abs(h(1e3, eps, n) + n * k_n(n)) < 1e-4);
}

TEST_CASE("bifurcation curve and transition witnesses") {
  SUBCASE("symmetric endpoint matches the critical mass") {
    std::vector<FoldCurvePoint> c = bifurcation_curve(4, {1.0});
    REQUIRE(c.size() == 1);
    CHECK(c[0].mu0 == doctest::Approx(mu_c(4)).epsilon(1e-8));
  }

  SUBCASE("folds exist across the grid for n = 4 and counts drop by 2") {
    std::vector<double> grid = uniform_grid(0.05, 0.95, 9);
    std::vector<FoldCurvePoint> c = bifurcation_curve(4, grid);
    REQUIRE(c.size() == grid.size());
    for (const FoldCurvePoint& p : c) {
      CHECK(p.mu0 > 0.0);
      int below = count_configurations(
                      RosetteParams(4, p.epsilon, p.mu0 * (1.0 - 1e-3))).count;
      int above = count_configurations(
                      RosetteParams(4, p.epsilon, p.mu0 * (1.0 + 1e-3))).count;
      CHECK(below - above == 2);
    }
  }

  SUBCASE("n = 3 middle band has no positive fold") {
    CHECK(bifurcation_curve(3, {0.5}).empty());
  }
}

TEST_CASE("hmax scan for n = 3") {
  std::vector<double> grid = log_grid(1e-5, 1.0 - 1e-5, 48);
  HmaxCurve c = scan_hmax_n3(grid);
  REQUIRE(c.hmax_values.size() == grid.size());
  CHECK(c.eps1 > 0.0);
  CHECK(c.eps1 < c.eps2);
  CHECK(c.eps2 < 1.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool inside = grid[i] > c.eps1 && grid[i] < c.eps2;
    CHECK((inside ? -c.hmax_values[i] : c.hmax_values[i]) > 0.0);
    CHECK(c.argmax_x[i] > 0.0);
    CHECK(c.argmax_x[i] < 1.0);
  }
  // Negative throughout the interior of the band, margin 0.01 off the ends.
  for (double e : uniform_grid(c.eps1 + 0.01, c.eps2 - 0.01, 20))
    CHECK(hmax_over_unit_interval(e, 3).hmax < 0.0);
}

TEST_CASE("main-lemma verification over the small-n range") {
  LemmaMainResult r = verify_lemma_main(4, 30);
  CHECK(r.report.pass);
  CHECK(r.report.worst_margin > 0.0);
  REQUIRE(r.rows.size() == 27);
  for (const Fig2Row& row : r.rows) {
    CHECK(row.x_star > 0.54);
    CHECK(row.x_star < 1.0);
    CHECK(row.h0_at_root > 0.0);
  }
}

TEST_CASE("lemma scaffolding reports") {
  CHECK(verify_A_n_negative(2, 200).pass);
  CHECK(verify_kn_lower(3, 200).pass);
  CHECK(verify_theorem2(3, 5).pass);
  CHECK(verify_n2_unique({0.1, 1.0, 5.0}, {0.3, 0.9}).pass);
  CHECK(verify_n3_monotone_above_one().pass);
  LemmaReport h3 = verify_h3_positive(107, 1e-3);
  CHECK(h3.pass);
  CHECK(h3.worst_margin > 0.0);
}

TEST_CASE("parallel grid kernel matches the serial reference bitwise") {
  const AngleTable table(7);
  std::vector<double> xs = log_grid(1e-3, 0.999, 4095);
  std::vector<double> a(xs.size()), b(xs.size());
  auto f = [&](double x) { return h_split(x, 0.37, 7, table).h; };
  eval_on_grid_serial(f, xs, a);
  eval_on_grid(f, xs, b);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(a[i] == b[i]);
}
