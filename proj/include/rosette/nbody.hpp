#pragma once

#include <array>
#include <vector>

#include "rosette/params.hpp"

namespace rosette {

using Vec2 = std::array<double, 2>;

// Explicit 2n+1 body realization of a shape ratio x: central mass mu at
// the origin, inner n-gon of unit masses at angles 2 pi k / n, outer
// n-gon of masses eps rotated by pi / n at radius x r1.
struct PlanarConfiguration {
  std::vector<Vec2> positions;
  std::vector<double> masses;
  int n;
};

struct NewtonianEval {
  double U;                     // sum over pairs of m_i m_j / |q_i - q_j|
  std::vector<Vec2> gradient;   // dU/dq_i
  double I;                     // sum of m_i |q_i|^2
};

struct OracleResult {
  double lambda_fit;
  double max_relative_residual;
  double U_value;
  double I_value;
};

struct CollisionError : std::runtime_error {
  CollisionError() : std::runtime_error("coincident bodies in configuration") {}
};

PlanarConfiguration build_configuration(double x, const RosetteParams& params,
                                        double r1);

// Direct pair summation from first principles; shares no code with the
// reduced function F. The serial variant is the reference; the default
// runs the per-body loops under OpenMP with identical summation order
// per body.
NewtonianEval newtonian_serial(const PlanarConfiguration& config);
NewtonianEval newtonian(const PlanarConfiguration& config);

// Least-squares fit of the scalar lambda in M^{-1} dU/dq = lambda q and
// the worst per-body relative residual. For a true central configuration
// the residual is < 1e-9.
OracleResult check_central(double x, const RosetteParams& params);
OracleResult check_central(const PlanarConfiguration& config);

}  // namespace rosette
