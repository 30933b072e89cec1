#pragma once

#include <array>
#include <vector>

#include "smectic/mesh.hpp"
#include "smectic/vec.hpp"

namespace smectic {

enum class ElementKind { P1, P2 };

// Lagrange degree-of-freedom map on a triangulation.
//
// Numbering is deterministic: vertex DOFs come first (vertex index = DOF
// index), then for P2 one DOF per edge, edges sorted lexicographically by
// (min vertex, max vertex). Local P2 ordering per element: the three
// vertices, then midpoints of edges (0,1), (1,2), (2,0).
struct DofMap {
  ElementKind kind = ElementKind::P1;
  int n_dofs = 0;
  std::vector<std::array<int, 6>> element_dofs;  // first 3 entries used for P1
  std::vector<std::array<double, 2>> dof_coords;
  std::vector<int> boundary_dofs;  // sorted ascending

  int dofs_per_element() const { return kind == ElementKind::P1 ? 3 : 6; }
};

DofMap build_dofmap(const Mesh& mesh, ElementKind kind);

// Symmetric Gauss rule on the reference triangle (0,0)-(1,0)-(0,1).
// points are barycentric (l0,l1,l2); weights sum to the reference area 1/2.
struct QuadratureRule {
  int degree = 0;  // declared polynomial exactness
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;

  int n_points() const { return static_cast<int>(points.size()); }
};

// Exact for polynomials up to `degree`; supported degrees 1..6.
// Throws std::invalid_argument above the supported maximum.
QuadratureRule quadrature_rule(int degree);

// Basis values and reference-coordinate gradients at a barycentric point.
struct BasisEval {
  int n = 0;
  std::array<double, 6> values{};
  std::array<Vec2, 6> ref_grads{};
};

BasisEval eval_basis(ElementKind kind, const std::array<double, 3>& bary);

// Affine element geometry: maps reference gradients to physical ones.
struct ElementGeometry {
  Mat2 inv_jacobian_t;  // J^{-T}
  double area = 0.0;    // |det J| / 2
};

ElementGeometry element_geometry(const Mesh& mesh, int tri);

}  // namespace smectic
