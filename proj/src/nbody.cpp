#include "rosette/nbody.hpp"

#include <cmath>

#include "rosette/grid.hpp"
#include "rosette/summation.hpp"

namespace rosette {

namespace {

const double kPi = std::acos(-1.0);

double pair_distance(const Vec2& a, const Vec2& b) {
  double dx = a[0] - b[0], dy = a[1] - b[1];
  double r = std::sqrt(dx * dx + dy * dy);
  if (r < 1e-13) throw CollisionError();
  return r;
}

// Per-body contribution in fixed j order; used by both execution paths so
// serial and parallel results are identical.
Vec2 gradient_of(const PlanarConfiguration& c, std::size_t i) {
  KahanSum gx, gy;
  for (std::size_t j = 0; j < c.positions.size(); ++j) {
    if (j == i) continue;
    double dx = c.positions[j][0] - c.positions[i][0];
    double dy = c.positions[j][1] - c.positions[i][1];
    double r = pair_distance(c.positions[i], c.positions[j]);
    double w = c.masses[i] * c.masses[j] / (r * r * r);
    gx.add(w * dx);
    gy.add(w * dy);
  }
  return Vec2{gx.value(), gy.value()};
}

double potential_row(const PlanarConfiguration& c, std::size_t i) {
  KahanSum s;
  for (std::size_t j = i + 1; j < c.positions.size(); ++j)
    s.add(c.masses[i] * c.masses[j] / pair_distance(c.positions[i], c.positions[j]));
  return s.value();
}

NewtonianEval assemble(const PlanarConfiguration& c, bool parallel) {
  const std::size_t m = c.positions.size();
  NewtonianEval out;
  out.gradient.resize(m);
  std::vector<double> rows(m, 0.0);

#ifdef _OPENMP
  int nt = worker_threads();
  if (parallel && nt != 1 && m >= 64) {
    const long long mm = static_cast<long long>(m);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < mm; ++i) {
      std::size_t ii = static_cast<std::size_t>(i);
      out.gradient[ii] = gradient_of(c, ii);
      rows[ii] = potential_row(c, ii);
    }
  } else
#endif
  {
    (void)parallel;
    for (std::size_t i = 0; i < m; ++i) {
      out.gradient[i] = gradient_of(c, i);
      rows[i] = potential_row(c, i);
    }
  }

  KahanSum u, inertia;
  for (std::size_t i = 0; i < m; ++i) {
    u.add(rows[i]);
    inertia.add(c.masses[i] *
                (c.positions[i][0] * c.positions[i][0] +
                 c.positions[i][1] * c.positions[i][1]));
  }
  out.U = u.value();
  out.I = inertia.value();
  return out;
}

}  // namespace

PlanarConfiguration build_configuration(double x, const RosetteParams& params,
                                        double r1) {
  if (!(x > 0.0)) throw std::domain_error("build_configuration: x must be > 0");
  if (!(r1 > 0.0)) throw std::domain_error("build_configuration: r1 must be > 0");
  PlanarConfiguration c;
  c.n = params.n;
  std::size_t total = 2 * static_cast<std::size_t>(params.n) + 1;
  c.positions.reserve(total);
  c.masses.reserve(total);
  c.positions.push_back(Vec2{0.0, 0.0});
  c.masses.push_back(params.mu);
  double r2 = x * r1;
  for (int k = 0; k < params.n; ++k) {
    double a = 2.0 * kPi * k / params.n;
    c.positions.push_back(Vec2{r1 * std::cos(a), r1 * std::sin(a)});
    c.masses.push_back(1.0);
  }
  for (int k = 0; k < params.n; ++k) {
    double a = 2.0 * kPi * k / params.n + kPi / params.n;
    c.positions.push_back(Vec2{r2 * std::cos(a), r2 * std::sin(a)});
    c.masses.push_back(params.epsilon);
  }
  return c;
}

NewtonianEval newtonian_serial(const PlanarConfiguration& config) {
  return assemble(config, false);
}

NewtonianEval newtonian(const PlanarConfiguration& config) {
  return assemble(config, true);
}

OracleResult check_central(const PlanarConfiguration& config) {
  NewtonianEval ev = newtonian(config);
  const std::size_t m = config.positions.size();

  // lambda minimizing sum |M^{-1} grad_i - lambda q_i|^2.
  KahanSum num, den;
  std::vector<Vec2> accel(m);
  for (std::size_t i = 0; i < m; ++i) {
    double mi = config.masses[i];
    // A zero central mass exerts and feels no force.
    accel[i] = mi > 0.0 ? Vec2{ev.gradient[i][0] / mi, ev.gradient[i][1] / mi}
                        : Vec2{0.0, 0.0};
    num.add(accel[i][0] * config.positions[i][0]);
    num.add(accel[i][1] * config.positions[i][1]);
    den.add(config.positions[i][0] * config.positions[i][0]);
    den.add(config.positions[i][1] * config.positions[i][1]);
  }
  double lambda = num.value() / den.value();

  double r_max = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    r_max = std::max(r_max, std::hypot(config.positions[i][0], config.positions[i][1]));

  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (config.masses[i] == 0.0) continue;
    double ri = std::hypot(config.positions[i][0], config.positions[i][1]);
    // Relative to |lambda q_i|; bodies at the origin (where that vanishes)
    // are measured against the global acceleration scale |lambda| r_max.
    double scale = std::abs(lambda) * (ri > 1e-12 * r_max ? ri : r_max);
    for (int d = 0; d < 2; ++d) {
      double err = std::abs(accel[i][d] - lambda * config.positions[i][d]);
      worst = std::max(worst, err / scale);
    }
  }
  return OracleResult{lambda, worst, ev.U, ev.I};
}

OracleResult check_central(double x, const RosetteParams& params) {
  return check_central(build_configuration(x, params, 1.0));
}

}  // namespace rosette
