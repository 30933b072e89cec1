#pragma once

#include <string>
#include <vector>

#include "smectic/fem.hpp"
#include "smectic/vec.hpp"

namespace smectic {

// Approximation of the potential gradient at the time midpoint.
// FirstOrderExplicit is a deliberately first-order variant kept for
// convergence-order control experiments; it is not reachable from config.
enum class PotentialScheme { Od2, Mp, FirstOrderExplicit };

std::string to_string(PotentialScheme s);

// Physical and numerical constants of a run.
struct Params {
  double mu1 = 1.0;
  double mu4 = 1.0;
  double mu5 = 1.0;
  double lambda = 1.0;   // kinetic/elastic coupling
  double gamma = 1.0;    // elastic relaxation
  double epsilon = 0.05;  // penalty width
  double dt = 1e-5;
  double t_end = 0.086;
  int nx = 32;
  Rect bounds{-1.0, 1.0, -1.0, 1.0};
  PotentialScheme scheme = PotentialScheme::Od2;
  double tol_picard = 1e-9;
  int max_picard = 50;
  double tol_lin = 1e-10;
  int out_every = 1000;
};

// Empty iff all parameter invariants hold; each violation names the field.
std::vector<std::string> validate_params(const Params& p);

// Unique-solvability bound 2*eps^2/gamma for the Od2 potential; time steps
// dt >= bound are refused unless overridden.
double solvability_bound(const Params& p);

// One time level of the coupled system, plus the previous level needed by
// the two-step extrapolation. Velocity layout is [all u_x | all u_y].
struct State {
  double t = 0.0;
  std::vector<double> u;    // 2 * n_u
  std::vector<double> p;    // n_s
  std::vector<double> phi;  // n_s
  std::vector<double> psi;  // n_s
  std::vector<double> prev_u;
  std::vector<double> prev_phi;
  bool has_prev = false;
};

// Ginzburg-Landau penalty F(n) = (|n|^2 - 1)^2 / 4 and its derivatives.
double potential_F(Vec2 n);
Vec2 potential_f(Vec2 n);                 // grad F = (|n|^2 - 1) n
Mat2 potential_f_jacobian(Vec2 n);        // (|n|^2 - 1) I + 2 n n^T

// Difference F(b) - F(a) evaluated in factored form, exact in real
// arithmetic and free of the cancellation of subtracting two quartics.
double potential_F_diff(Vec2 b, Vec2 a);

// Second-order linear approximation f(a) + f'(a)(b-a)/2 in closed form.
Vec2 fk_od2(Vec2 b, Vec2 a);

// Midpoint-secant approximation ((|a|^2+|b|^2)/2 - 1)(a+b)/2; satisfies the
// discrete chain rule fk . (b-a) = F(b) - F(a) exactly.
Vec2 fk_mp(Vec2 b, Vec2 a);

struct Energies {
  double kinetic = 0.0;   // ||u||^2 / 2
  double elastic = 0.0;   // ||psi||^2 / 2
  double penalty = 0.0;   // int F(grad phi) / eps^2
  double total = 0.0;     // kinetic + lambda (elastic + penalty)
};

Energies energies(const State& s, const Discretization& d, const Params& p);

}  // namespace smectic
