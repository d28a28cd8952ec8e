#include "rosette/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rosette/summation.hpp"

namespace rosette {

namespace {

const double kPi = std::acos(-1.0);

void require_n(int n, int lo, const char* who) {
  if (n < lo) throw std::domain_error(std::string(who) + ": n out of domain");
}

void require_x_positive(double x, const char* who) {
  if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": x must be > 0");
}

}  // namespace

double k_n(int n) {
  require_n(n, 2, "k_n");
  KahanSum s;
  for (int k = 1; k <= n - 1; ++k) s.add(1.0 / std::sin(kPi * k / n));
  return s.value() / (4.0 * n);
}

double k_n_lower(int n) {
  require_n(n, 3, "k_n_lower");
  double c = std::cos(kPi / n);
  // 1 - cos(pi/n) = 2 sin^2(pi/2n) avoids cancellation for large n.
  double s = std::sin(kPi / (2.0 * n));
  return std::log((1.0 + c) / (2.0 * s * s)) / (4.0 * kPi) +
         1.0 / (4.0 * n * std::sin(kPi / n));
}

double A_n(int n) {
  require_n(n, 2, "A_n");
  KahanSum s;
  for (int k = 1; k <= n; ++k) {
    double phi = (2.0 * k - 1.0) * kPi / n;
    s.add(1.0 / std::sin(phi / 2.0));
  }
  return n * k_n(n) - 0.25 * s.value();
}

double A_n_alt(int n) {
  require_n(n, 2, "A_n_alt");
  KahanSum s;
  for (int k = 1; k <= n - 1; ++k) s.add(1.0 / std::sin(kPi * k / n));
  for (int k = 1; k <= n; ++k) s.add(-1.0 / std::sin(kPi * k / n - kPi / (2.0 * n)));
  return 0.25 * s.value();
}

double mu_c(int n) {
  require_n(n, 3, "mu_c");
  KahanSum s;
  for (int k = 1; k <= n; ++k) {
    double phi = (2.0 * k - 1.0) * kPi / n;
    double sh = std::sin(phi / 2.0);
    s.add(std::cos(phi) / (sh * sh * sh));
  }
  return s.value() / 12.0 - n * k_n(n);
}

double F_eval(double x, int n, double eps, double mu, const AngleTable& table) {
  require_x_positive(x, "F");
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  KahanSum s;
  for (int k = 0; k < n; ++k) {
    double u = table.u[static_cast<std::size_t>(k)];
    double d = 1.0 + x2 - 2.0 * x * u;
    // x^3 * [(1-eps) - (1/x)(1-eps x^2) u] written polynomially.
    double num = (1.0 - eps) * x3 - u * x2 + eps * u * x4;
    s.add(num / (d * std::sqrt(d)));
  }
  return mu / n * (1.0 - x3) + k_n(n) * (eps - x3) + s.value() / n;
}

double F(double x, const RosetteParams& p, const AngleTable& table) {
  return F_eval(x, p.n, p.epsilon, p.mu, table);
}

double F(double x, const RosetteParams& p) { return F(x, p, AngleTable(p.n)); }

double dF_dx_eval(double x, int n, double eps, double mu, const AngleTable& table) {
  require_x_positive(x, "dF_dx");
  const double x2 = x * x, x3 = x2 * x;
  KahanSum s;
  for (int k = 0; k < n; ++k) {
    double u = table.u[static_cast<std::size_t>(k)];
    double d = 1.0 + x2 - 2.0 * x * u;
    double num = (1.0 - eps) * x3 - u * x2 + eps * u * x2 * x2;
    double dnum = 3.0 * (1.0 - eps) * x2 - 2.0 * u * x + 4.0 * eps * u * x3;
    double dd = 2.0 * (x - u);
    double d32 = d * std::sqrt(d);
    s.add(dnum / d32 - 1.5 * num * dd / (d32 * d));
  }
  return -3.0 * x2 * mu / n - 3.0 * x2 * k_n(n) + s.value() / n;
}

double dF_dx(double x, const RosetteParams& p, const AngleTable& table) {
  return dF_dx_eval(x, p.n, p.epsilon, p.mu, table);
}

double dF_dx(double x, const RosetteParams& p) { return dF_dx(x, p, AngleTable(p.n)); }

double h0(double x, int n, const AngleTable& table) {
  require_x_positive(x, "h0");
  require_n(n, 2, "h0");
  const double x2 = x * x;
  // (1-x^2)/(1-x^3) = (1+x)/(1+x+x^2): removable at x = 1.
  double a = x2 * (1.0 + x) / (1.0 + x + x2);
  KahanSum s;
  for (int k = 0; k < n; ++k) {
    double u = table.u[static_cast<std::size_t>(k)];
    double d = 1.0 + x2 - 2.0 * x * u;
    s.add(u / (d * std::sqrt(d)));
  }
  return -n * k_n(n) + a * s.value();
}

double h0(double x, int n) { return h0(x, n, AngleTable(n)); }

double h1_tilde(double x, int n, const AngleTable& table) {
  require_x_positive(x, "h1_tilde");
  require_n(n, 2, "h1_tilde");
  const double x2 = x * x, x3 = x2 * x;
  KahanSum s;
  for (int k = 0; k < n; ++k) {
    double u = table.u[static_cast<std::size_t>(k)];
    double d = 1.0 + x2 - 2.0 * x * u;
    s.add((1.0 - x * u) / (d * std::sqrt(d)));
  }
  return n * k_n(n) - x3 * s.value();
}

double h1_tilde(double x, int n) { return h1_tilde(x, n, AngleTable(n)); }

double h1(double x, int n, const AngleTable& table) {
  if (std::abs(x - 1.0) < kPoleGuard)
    throw std::domain_error("h1: pole at x = 1; use h1_tilde or F near 1");
  return h1_tilde(x, n, table) / (1.0 - x * x * x);
}

double h1(double x, int n) { return h1(x, n, AngleTable(n)); }

HValue h_split(double x, double epsilon, int n, const AngleTable& table) {
  double v0 = h0(x, n, table);
  double v1 = h1(x, n, table);
  return HValue{v0 + (1.0 - epsilon) * v1, v0, v1};
}

HValue h_split(double x, double epsilon, int n) {
  return h_split(x, epsilon, n, AngleTable(n));
}

double h(double x, double epsilon, int n) { return h_split(x, epsilon, n).h; }

double dh0_dx(double x, int n, const AngleTable& table) {
  require_x_positive(x, "dh0_dx");
  const double x2 = x * x, x3 = x2 * x;
  double q = 1.0 + x + x2;
  double a = (x2 + x3) / q;
  double da = ((2.0 * x + 3.0 * x2) * q - (x2 + x3) * (1.0 + 2.0 * x)) / (q * q);
  KahanSum s, ds;
  for (int k = 0; k < n; ++k) {
    double u = table.u[static_cast<std::size_t>(k)];
    double d = 1.0 + x2 - 2.0 * x * u;
    double d32 = d * std::sqrt(d);
    s.add(u / d32);
    ds.add(-3.0 * u * (x - u) / (d32 * d));
  }
  return da * s.value() + a * ds.value();
}

double dh0_dx(double x, int n) { return dh0_dx(x, n, AngleTable(n)); }

namespace {

double dh1_tilde_dx(double x, int n, const AngleTable& table) {
  const double x2 = x * x, x3 = x2 * x;
  KahanSum s;
  for (int k = 0; k < n; ++k) {
    double u = table.u[static_cast<std::size_t>(k)];
    double d = 1.0 + x2 - 2.0 * x * u;
    double d32 = d * std::sqrt(d);
    s.add((3.0 * x2 * (1.0 - x * u) - x3 * u) / d32 -
          3.0 * x3 * (1.0 - x * u) * (x - u) / (d32 * d));
  }
  return -s.value();
}

}  // namespace

double dh1_dx(double x, int n, const AngleTable& table) {
  if (std::abs(x - 1.0) < kPoleGuard)
    throw std::domain_error("dh1_dx: pole at x = 1");
  double one_m_x3 = 1.0 - x * x * x;
  double t = h1_tilde(x, n, table);
  double dt = dh1_tilde_dx(x, n, table);
  return (dt * one_m_x3 + 3.0 * x * x * t) / (one_m_x3 * one_m_x3);
}

double dh1_dx(double x, int n) { return dh1_dx(x, n, AngleTable(n)); }

double dh_dx(double x, double epsilon, int n, const AngleTable& table) {
  return dh0_dx(x, n, table) + (1.0 - epsilon) * dh1_dx(x, n, table);
}

double dh_dx(double x, double epsilon, int n) {
  return dh_dx(x, epsilon, n, AngleTable(n));
}

BoundBreakdown bound_functions(double x, int n, const AngleTable& table) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("bound_functions: x must lie in (0, 1)");
  const double x2 = x * x, x3 = x2 * x, x5 = x3 * x2;
  const double r1 = x * (1.0 + x + x2) / (1.0 + x + x2 + x3 + x2 * x2);
  const double r2 = 0.15 * r1 + 0.85;

  auto g = [&](double u) {
    double d = 1.0 + x2 - 2.0 * x * u;
    return (u - r1) / (d * std::sqrt(d));
  };

  double u_minus = (3.0 * x * r1 - 1.0 - x2) / x;
  bool clamped = false;
  if (u_minus < -1.0) { u_minus = -1.0; clamped = true; }
  if (u_minus > 1.0) { u_minus = 1.0; clamped = true; }

  double g_min = g(u_minus);
  double g_r2 = g(r2);
  double h2 = (1.0 - x3) / (x2 * (1.0 - x5)) *
              (h0(x, n, table) + h1_tilde(x, n, table));
  double h3 = n / kPi * ((kPi - std::acos(r1)) * g_min + std::acos(r2) * g_r2) - g_r2;
  return BoundBreakdown{r1, r2, u_minus, g_min, g_r2, h2, h3, clamped};
}

BoundBreakdown bound_functions(double x, int n) {
  return bound_functions(x, n, AngleTable(n));
}

double eta(double x, double epsilon) {
  if (!(x >= 0.0)) throw std::domain_error("eta: x must be >= 0");
  double d = 1.0 + x * x;
  return (1.0 - epsilon) / (d * d * std::sqrt(d));
}

double h0_n3_closed(double x) {
  require_x_positive(x, "h0_n3_closed");
  const double s3 = std::sqrt(3.0);
  double q = 1.0 - x + x * x;
  double p = 1.0 + x;
  return -s3 / 3.0 +
         x * x * p / (1.0 + x + x * x) *
             (1.0 / (q * std::sqrt(q)) - 1.0 / (p * p * p));
}

double h1_n3_closed(double x) {
  require_x_positive(x, "h1_n3_closed");
  if (std::abs(x - 1.0) < kPoleGuard)
    throw std::domain_error("h1_n3_closed: pole at x = 1");
  const double s3 = std::sqrt(3.0);
  double x3 = x * x * x;
  double q = 1.0 - x + x * x;
  double p = 1.0 + x;
  return s3 / (3.0 * (1.0 - x3)) -
         x3 / (1.0 - x3) * (1.0 / (p * p) + (2.0 - x) / (q * std::sqrt(q)));
}

}  // namespace rosette
