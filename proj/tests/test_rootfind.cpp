#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rosette/potential.hpp"
#include "rosette/rootfind.hpp"

using namespace rosette;

TEST_CASE("bracketing a simple quadratic") {
  auto f = [](double x) { return x * x - 1.0; };
  std::vector<Bracket> bs = bracket_roots(f, 0.0, 3.0, 16);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].lo < 1.0);
  CHECK(bs[0].hi > 1.0);
  CHECK(bs[0].f_lo * bs[0].f_hi < 0.0);
}

TEST_CASE("bracket counts for mu = h0 on (0,1) straddle the fold") {
  const int n = 3;
  const AngleTable table(n);
  double muc = mu_c(n);
  auto shifted = [&](double mu) {
    return [&table, mu](double x) { return h0(x, 3, table) - mu; };
  };
  // h0 is symmetric under x -> 1/x and increasing on (0,1), so below the
  // critical mass exactly one of the three roots lies in (0,1); the other
  // two are x = 1 and the reciprocal above 1. Confirmed by a 10^6-point
  // sign scan.
  CHECK(bracket_roots(shifted(muc / 2.0), 1e-4, 1.0 - 1e-6, 512).size() == 1);
  CHECK(bracket_roots(shifted(2.0 * muc), 1e-4, 1.0 - 1e-6, 512).size() == 0);
}

TEST_CASE("evaluation error carries the probe location") {
  auto f = [](double x) { return x < 0.5 ? 1.0 : std::nan(""); };
  CHECK_THROWS_AS(bracket_roots(f, 0.0, 1.0, 16), EvaluationError);
}

TEST_CASE("refine_root reaches sqrt(2) to 1e-14") {
  auto f = [](double x) { return x * x - 2.0; };
  RefinedRoot r = refine_root(f, Bracket{1.0, 2.0, f(1.0), f(2.0)});
  CHECK(std::abs(r.x - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(r.residual) <= kDefaultTolF);
}

TEST_CASE("h1 root for n = 3") {
  const AngleTable table(3);
  auto f = [&](double x) { return h1(x, 3, table); };
  std::vector<Bracket> bs = bracket_roots(f, 0.54, 1.0 - 1e-6, 256);
  REQUIRE(bs.size() == 1);
  RefinedRoot r = refine_root(f, bs[0]);
  CHECK(r.x == doctest::Approx(0.617364).epsilon(1e-5));
  // The reduced function is negative there: the small-n positivity
  // argument starts at n = 4.
  CHECK(h0(r.x, 3, table) == doctest::Approx(-0.188154).epsilon(1e-4));
}

TEST_CASE("find_fold at eps = 1 recovers the symmetric critical mass") {
  for (int n : {3, 4, 6}) {
    FoldPoint fp = find_fold(1.0, n, 1e-3, 1.0 - 1e-9);
    CHECK(fp.x_star == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(fp.mu0 == doctest::Approx(mu_c(n)).epsilon(1e-8));
    CHECK(fp.residual_f < 1e-9);
    CHECK(fp.residual_dfdx < 1e-9);
    CHECK(fp.non_degenerate);
  }
}

TEST_CASE("fold consistency: two roots below mu0, none above, locally") {
  const int n = 4;
  const double eps = 0.5;
  const AngleTable table(n);
  FoldPoint fp = find_fold(eps, n, 1e-4, 1.0 - 1e-9);
  CHECK(fp.mu0 > 0.0);
  double delta = 1e-4 * std::max(1.0, std::abs(fp.mu0));
  double w = 0.2 * std::min(fp.x_star, 1.0 - fp.x_star);
  auto local_count = [&](double mu) {
    auto f = [&](double x) { return h_split(x, eps, n, table).h - mu; };
    return bracket_roots(f, fp.x_star - w, fp.x_star + w, 512).size();
  };
  CHECK(local_count(fp.mu0 - delta) == 2);
  CHECK(local_count(fp.mu0 + delta) == 0);
}

TEST_CASE("find_fold reports monotone intervals as not found") {
  // For n = 3 inside the band where the inner maximum of h is negative,
  // restricting to the left of the maximum leaves dh/dx single-signed.
  CHECK_THROWS_AS(find_fold(0.5, 3, 1e-4, 0.05), FoldNotFoundError);
}

TEST_CASE("tangency raises fold-suspected instead of emitting a root") {
  // A close root pair hiding inside one grid cell is resolved by the
  // adaptive dip probe; an exact tangency refuses to refine.
  const double c = 1.0123, d = 1e-4;
  auto f = [=](double x) { return (x - c) * (x - c) - d * d; };
  std::vector<Bracket> bs = bracket_roots(f, 0.0, 2.0, 64);
  CHECK(bs.size() == 2);
  auto g = [=](double x) { return (x - c) * (x - c); };
  CHECK_THROWS_AS(refine_root(g, Bracket{0.0, 1.5, g(0.0), -1e-5}),
                  FoldSuspectedError);
}

TEST_CASE("determinism: identical inputs give bit-identical roots") {
  const AngleTable table(5);
  auto f = [&](double x) { return h_split(x, 0.3, 5, table).h - 1e-3; };
  std::vector<Bracket> b1 = bracket_roots(f, 1e-4, 1.0 - 1e-6, 2048);
  std::vector<Bracket> b2 = bracket_roots(f, 1e-4, 1.0 - 1e-6, 2048);
  REQUIRE(b1.size() == b2.size());
  for (std::size_t i = 0; i < b1.size(); ++i) {
    CHECK(b1[i].lo == b2[i].lo);
    CHECK(b1[i].hi == b2[i].hi);
    RefinedRoot r1 = refine_root(f, b1[i]);
    RefinedRoot r2 = refine_root(f, b2[i]);
    CHECK(r1.x == r2.x);
  }
}
