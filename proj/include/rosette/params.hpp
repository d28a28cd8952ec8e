#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rosette {

// Problem instance for the (2n+1)-body rosette: two concentric regular
// n-gons with mass ratios epsilon = m2/m1 and a central mass mu = m0/m1.
struct RosetteParams {
  int n;
  double epsilon;
  double mu;

  RosetteParams(int n_, double epsilon_, double mu_)
      : n(n_), epsilon(epsilon_), mu(mu_) {
    if (n < 2) throw std::domain_error("RosetteParams: n must be >= 2");
    if (!(epsilon > 0.0)) throw std::domain_error("RosetteParams: epsilon must be > 0");
    if (!(mu >= 0.0)) throw std::domain_error("RosetteParams: mu must be >= 0");
  }

  // Swaps the roles of the two polygons: (x, eps, mu) -> (1/x, 1/eps, mu/eps).
  // The central mass is re-expressed against the new reference polygon, so
  // mu' = m0/m2 = mu/eps; with this map F(x,eps,mu) = -eps x^3 F(1/x,1/eps,mu/eps).
  RosetteParams dual() const { return RosetteParams(n, 1.0 / epsilon, mu / epsilon); }
};

// Strong type for the radius ratio x = r2/r1.
struct ShapeRatio {
  double x;

  explicit ShapeRatio(double x_) : x(x_) {
    if (!(x > 0.0)) throw std::domain_error("ShapeRatio: x must be > 0");
  }
  ShapeRatio reciprocal() const { return ShapeRatio(1.0 / x); }
};

// Angles phi_k = (2k-1) pi / n and their cosines u_k, k = 1..n.
struct AngleTable {
  int n;
  std::vector<double> phi;
  std::vector<double> u;

  explicit AngleTable(int n_) : n(n_) {
    if (n < 2) throw std::domain_error("AngleTable: n must be >= 2");
    phi.resize(static_cast<std::size_t>(n));
    u.resize(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int k = 1; k <= n; ++k) {
      double a = (2.0 * k - 1.0) * pi / n;
      phi[static_cast<std::size_t>(k - 1)] = a;
      u[static_cast<std::size_t>(k - 1)] = std::cos(a);
    }
  }
};

}  // namespace rosette
