// ============================================================================
// fem.cpp - discretization context and pointwise field evaluation
// ============================================================================

#include "smectic/fem.hpp"

namespace smectic {

Discretization build_discretization(int nx, const Rect& bounds, int quad_degree) {
  Discretization d;
  d.mesh = build_structured_rect(nx, bounds);
  d.space_u = build_dofmap(d.mesh, ElementKind::P2);
  d.space_s = build_dofmap(d.mesh, ElementKind::P1);
  d.quad = quadrature_rule(quad_degree);

  d.geom.reserve(d.mesh.n_triangles());
  for (int t = 0; t < d.mesh.n_triangles(); ++t) d.geom.push_back(element_geometry(d.mesh, t));

  d.basis_u.reserve(d.quad.n_points());
  d.basis_s.reserve(d.quad.n_points());
  for (const auto& pt : d.quad.points) {
    d.basis_u.push_back(eval_basis(ElementKind::P2, pt));
    d.basis_s.push_back(eval_basis(ElementKind::P1, pt));
  }
  return d;
}

double eval_scalar(const Discretization& d, std::span<const double> coeffs, int tri, int q) {
  const auto& dofs = d.space_s.element_dofs[tri];
  const auto& b = d.basis_s[q];
  double v = 0.0;
  for (int k = 0; k < 3; ++k) v += coeffs[dofs[k]] * b.values[k];
  return v;
}

Vec2 eval_scalar_grad(const Discretization& d, std::span<const double> coeffs, int tri, int q) {
  const auto& dofs = d.space_s.element_dofs[tri];
  const auto& b = d.basis_s[q];
  Vec2 g{};
  for (int k = 0; k < 3; ++k) g = g + coeffs[dofs[k]] * b.ref_grads[k];
  return d.geom[tri].inv_jacobian_t * g;
}

Vec2 eval_velocity(const Discretization& d, std::span<const double> u, int tri, int q) {
  const auto& dofs = d.space_u.element_dofs[tri];
  const auto& b = d.basis_u[q];
  const int n = d.space_u.n_dofs;
  Vec2 v{};
  for (int k = 0; k < 6; ++k) {
    v.x += u[dofs[k]] * b.values[k];
    v.y += u[dofs[k] + n] * b.values[k];
  }
  return v;
}

Mat2 eval_velocity_grad(const Discretization& d, std::span<const double> u, int tri, int q) {
  const auto& dofs = d.space_u.element_dofs[tri];
  const auto& b = d.basis_u[q];
  const int n = d.space_u.n_dofs;
  Vec2 gx{}, gy{};  // gradients of u_x and u_y
  for (int k = 0; k < 6; ++k) {
    const Vec2 g = d.geom[tri].inv_jacobian_t * b.ref_grads[k];
    gx = gx + u[dofs[k]] * g;
    gy = gy + u[dofs[k] + n] * g;
  }
  return {gx.x, gx.y, gy.x, gy.y};
}

}  // namespace smectic
