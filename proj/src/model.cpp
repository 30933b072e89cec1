// ============================================================================
// model.cpp - parameters, Ginzburg-Landau potential family, energies
// ============================================================================

#include "smectic/model.hpp"

#include <cmath>

namespace smectic {

std::string to_string(PotentialScheme s) {
  switch (s) {
    case PotentialScheme::Od2: return "od2";
    case PotentialScheme::Mp: return "mp";
    case PotentialScheme::FirstOrderExplicit: return "first_order_explicit";
  }
  return "?";
}

std::vector<std::string> validate_params(const Params& p) {
  std::vector<std::string> v;
  auto require = [&v](bool ok, const char* msg) {
    if (!ok) v.emplace_back(msg);
  };
  require(p.mu1 >= 0.0, "mu1: must be >= 0");
  require(p.mu4 > 0.0, "mu4: must be > 0");
  require(p.mu5 >= 0.0, "mu5: must be >= 0");
  require(p.lambda > 0.0, "lambda: must be > 0");
  require(p.gamma > 0.0, "gamma: must be > 0");
  require(p.epsilon > 0.0, "epsilon: must be > 0");
  require(p.dt > 0.0, "dt: must be > 0");
  require(p.t_end > 0.0, "t_end: must be > 0");
  require(p.nx >= 1, "nx: must be >= 1");
  require(p.bounds.x_max > p.bounds.x_min, "bounds: x_max must exceed x_min");
  require(p.bounds.y_max > p.bounds.y_min, "bounds: y_max must exceed y_min");
  require(p.tol_picard > 0.0, "tol_picard: must be > 0");
  require(p.max_picard >= 1, "max_picard: must be >= 1");
  require(p.tol_lin > 0.0, "tol_lin: must be > 0");
  require(p.out_every >= 1, "out_every: must be >= 1");
  return v;
}

double solvability_bound(const Params& p) {
  // 2 eps^2 / gamma, grouped so that the canonical eps = 0.05, gamma = 1
  // lands on the decimal value 5e-3.
  return p.epsilon / (p.gamma / (2.0 * p.epsilon));
}

double potential_F(Vec2 n) {
  const double s = norm_sq(n) - 1.0;
  return 0.25 * s * s;
}

Vec2 potential_f(Vec2 n) { return (norm_sq(n) - 1.0) * n; }

Mat2 potential_f_jacobian(Vec2 n) {
  const double s = norm_sq(n) - 1.0;
  Mat2 j = 2.0 * outer(n, n);
  j.a11 += s;
  j.a22 += s;
  return j;
}

double potential_F_diff(Vec2 b, Vec2 a) {
  // F(b) - F(a) = ((|a|^2 + |b|^2)/2 - 1) * (|b|^2 - |a|^2) / 2,
  // with |b|^2 - |a|^2 = (b - a).(b + a) to avoid cancellation.
  const double mean = 0.5 * (norm_sq(a) + norm_sq(b)) - 1.0;
  const double diff = dot(b - a, b + a);
  return 0.5 * mean * diff;
}

Vec2 fk_od2(Vec2 b, Vec2 a) {
  return dot(a, b) * a + 0.5 * norm_sq(a) * (b - a) - 0.5 * (b + a);
}

Vec2 fk_mp(Vec2 b, Vec2 a) {
  return (0.5 * (norm_sq(a) + norm_sq(b)) - 1.0) * (0.5 * (a + b));
}

Energies energies(const State& s, const Discretization& d, const Params& p) {
  Energies e;
  const double inv_eps2 = 1.0 / (p.epsilon * p.epsilon);
  for (int t = 0; t < d.mesh.n_triangles(); ++t) {
    const double jac = 2.0 * d.geom[t].area;  // reference weights carry the 1/2
    for (int q = 0; q < d.quad.n_points(); ++q) {
      const double w = d.quad.weights[q] * jac;
      const Vec2 u = eval_velocity(d, s.u, t, q);
      const double psi = eval_scalar(d, s.psi, t, q);
      const Vec2 grad_phi = eval_scalar_grad(d, s.phi, t, q);
      e.kinetic += 0.5 * w * norm_sq(u);
      e.elastic += 0.5 * w * psi * psi;
      e.penalty += w * inv_eps2 * potential_F(grad_phi);
    }
  }
  e.total = e.kinetic + p.lambda * (e.elastic + e.penalty);
  return e;
}

}  // namespace smectic
