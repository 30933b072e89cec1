#pragma once

#include <span>
#include <vector>

#include "smectic/fem.hpp"
#include "smectic/model.hpp"
#include "smectic/sparse.hpp"

namespace smectic {

// Global index offsets of the monolithic per-step system
// [u_x | u_y | p | phi | psi | pressure-mean multiplier].
struct BlockLayout {
  int ux = 0;
  int uy = 0;
  int p = 0;
  int phi = 0;
  int psi = 0;
  int mult = 0;
  int total = 0;
};

BlockLayout make_block_layout(int n_u, int n_s);

// Operators that do not change between time steps.
struct StepOperators {
  CsrMatrix mass_s;    // P1 mass
  CsrMatrix stiff_s;   // P1 stiffness, natural BC
  CsrMatrix mass_u;    // P2 mass, one velocity component
  CsrMatrix div;       // (div u, pbar): n_s rows, 2 n_u cols
  std::vector<double> int_p;  // integral of each P1 basis function
};

StepOperators build_step_operators(const Discretization& d);

CsrMatrix assemble_mass(const Discretization& d, const DofMap& space);
CsrMatrix assemble_stiffness(const Discretization& d, const DofMap& space);

// Trilinear form c(u_tilde, v, w) = ((u_tilde . grad) v, w) + ((div u_tilde) v, w)/2
// assembled per velocity component (the vector form is this block on each
// diagonal). u_tilde is a velocity coefficient vector [u_x | u_y].
CsrMatrix assemble_convection(const Discretization& d, std::span<const double> u_tilde);

// Dissipative-stress form on the full vector space (2 n_u square):
//   mu1 (g.D(u)g, g.D(v)g) + mu4 (D(u), D(v)) + 2 mu5 (D(u)g, D(v)g),
// g = grad of the P1 field phi_tilde at each quadrature point.
CsrMatrix assemble_sigma_d(const Discretization& d, std::span<const double> phi_tilde,
                           const Params& params);

// Extrapolants entering one step, as coefficient vectors.
struct Extrapolants {
  std::vector<double> u_tilde;    // 2 n_u
  std::vector<double> phi_tilde;  // n_s
};

struct StepSystem {
  CsrMatrix matrix;
  std::vector<double> rhs;
};

// Monolithic linear system for one step: unknowns (u^{n+1}, p^{n+1/2},
// phi^{n+1}, psi^{n+1}, multiplier). With Od2 the potential block is linear
// and lives in the matrix; with Mp (and FirstOrderExplicit) the potential
// term is frozen at phi_frozen and goes to the right-hand side. Velocity
// Dirichlet rows are replaced by identity rows with zero rhs.
StepSystem assemble_step_system(const State& state, const Extrapolants& ex,
                                std::span<const double> phi_frozen, const Params& params,
                                const Discretization& d, const StepOperators& ops,
                                const BlockLayout& layout);

// L2 projection of -laplace(phi0) onto the P1 space: solve M psi = K phi0.
std::vector<double> project_initial_psi(std::span<const double> phi0, const Discretization& d,
                                        const StepOperators& ops);

}  // namespace smectic
