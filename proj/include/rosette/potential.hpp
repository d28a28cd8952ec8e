#pragma once

#include "rosette/params.hpp"

namespace rosette {

// Half-width of the excluded window around the x = 1 pole of h.
inline constexpr double kPoleGuard = 1e-12;

// Potential of a regular n-gon of unit size and unit masses,
// k_n = (1/4n) sum_{k=1}^{n-1} csc(k pi / n).
double k_n(int n);

// Trapezoidal lower bound k_n^-; valid for n >= 3 and k_n > k_n^-.
double k_n_lower(int n);

// A_n = n k_n - (1/4) sum_{k=1}^n csc(phi_k / 2). Controls the sign of
// the pole of h at x = 1; A_n < 0 for all n >= 2.
double A_n(int n);

// Same quantity as a single csc difference sum; kept as an independent
// route for double-entry checks.
double A_n_alt(int n);

// Critical central-mass ratio at epsilon = 1 (n >= 3). Above it only the
// symmetric x = 1 configuration survives.
double mu_c(int n);

// Central-configuration residual F(x, eps, mu); zero exactly at the
// rosette central configurations. Smooth on x > 0, including x = 1.
double F(double x, const RosetteParams& p, const AngleTable& table);
double F(double x, const RosetteParams& p);

// Analytic partial dF/dx at fixed (eps, mu).
double dF_dx(double x, const RosetteParams& p, const AngleTable& table);
double dF_dx(double x, const RosetteParams& p);

// Raw evaluations without the mu >= 0 parameter check; fold analysis
// evaluates F along extrema of h where h may be negative.
double F_eval(double x, int n, double epsilon, double mu, const AngleTable& table);
double dF_dx_eval(double x, int n, double epsilon, double mu, const AngleTable& table);

struct HValue {
  double h;
  double h0;
  double h1;
};

// Reduced mass function h(x, eps) = h0(x) + (1 - eps) h1(x); the roots of
// mu = h(x, eps) with x != 1 are the rosette central configurations.
// Rejects |x - 1| < kPoleGuard (h1 has a pole there); callers needing the
// neighborhood of 1 must use h0 / h1_tilde / F instead.
HValue h_split(double x, double epsilon, int n, const AngleTable& table);
HValue h_split(double x, double epsilon, int n);
double h(double x, double epsilon, int n);

// h0 is continuous on x > 0 (the (1-x^2)/(1-x^3) factor is removable);
// h0(1) = mu_c(n) for n >= 3.
double h0(double x, int n, const AngleTable& table);
double h0(double x, int n);
double h1(double x, int n, const AngleTable& table);
double h1(double x, int n);

// h1_tilde(x) = (1 - x^3) h1(x); continuous at x = 1 with value A_n.
double h1_tilde(double x, int n, const AngleTable& table);
double h1_tilde(double x, int n);

double dh_dx(double x, double epsilon, int n, const AngleTable& table);
double dh_dx(double x, double epsilon, int n);
double dh0_dx(double x, int n, const AngleTable& table);
double dh0_dx(double x, int n);
double dh1_dx(double x, int n, const AngleTable& table);
double dh1_dx(double x, int n);

// Auxiliary bound chain used by the large-n positivity argument for h2.
struct BoundBreakdown {
  double R1;
  double R2;
  double u_minus;       // after clamping to [-1, 1]
  double g_at_u_minus;
  double g_at_R2;
  double h2;
  double h3;            // for the n passed in
  bool u_minus_clamped;
};
BoundBreakdown bound_functions(double x, int n, const AngleTable& table);
BoundBreakdown bound_functions(double x, int n);

// n = 2 helper eta(x) = (1 - eps) / (1 + x^2)^{5/2}.
double eta(double x, double epsilon);

// n = 3 closed forms, kept as a separate code path and cross-checked
// against the general-n evaluation.
double h0_n3_closed(double x);
double h1_n3_closed(double x);

}  // namespace rosette
