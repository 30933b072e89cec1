#pragma once

#include <span>
#include <vector>

#include "smectic/mesh.hpp"
#include "smectic/spaces.hpp"

namespace smectic {

// Geometric discretization context shared by assembly and diagnostics:
// the mesh, the P2 velocity space, the P1 scalar space (pressure, phi, psi),
// one quadrature rule used for every form, and per-element affine geometry.
struct Discretization {
  Mesh mesh;
  DofMap space_u;  // P2
  DofMap space_s;  // P1
  QuadratureRule quad;
  std::vector<ElementGeometry> geom;        // per element
  std::vector<BasisEval> basis_u;           // per quadrature point, reference
  std::vector<BasisEval> basis_s;

  int n_u() const { return space_u.n_dofs; }
  int n_s() const { return space_s.n_dofs; }

  Vec2 physical_grad(int tri, const Vec2& ref_grad) const {
    return geom[tri].inv_jacobian_t * ref_grad;
  }
};

Discretization build_discretization(int nx, const Rect& bounds, int quad_degree = 6);

// Pointwise field evaluation from coefficient vectors, at quadrature point q
// of element tri. Scalar fields live on space_s, velocity components on
// space_u with layout [all u_x | all u_y].
double eval_scalar(const Discretization& d, std::span<const double> coeffs, int tri, int q);
Vec2 eval_scalar_grad(const Discretization& d, std::span<const double> coeffs, int tri, int q);
Vec2 eval_velocity(const Discretization& d, std::span<const double> u, int tri, int q);
Mat2 eval_velocity_grad(const Discretization& d, std::span<const double> u, int tri, int q);

}  // namespace smectic
