// ============================================================================
// spaces.cpp - reference elements, quadrature rules, DOF maps
// ============================================================================

#include "smectic/spaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace smectic {

DofMap build_dofmap(const Mesh& mesh, ElementKind kind) {
  DofMap dm;
  dm.kind = kind;
  const int nv = mesh.n_vertices();
  dm.element_dofs.resize(mesh.n_triangles());

  if (kind == ElementKind::P1) {
    dm.n_dofs = nv;
    dm.dof_coords = mesh.vertices;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
      const auto& tri = mesh.triangles[t];
      dm.element_dofs[t] = {tri[0], tri[1], tri[2], -1, -1, -1};
    }
    std::set<int> bset;
    for (const auto& e : mesh.boundary_edges) {
      bset.insert(e.v0);
      bset.insert(e.v1);
    }
    dm.boundary_dofs.assign(bset.begin(), bset.end());
    return dm;
  }

  // P2: vertices first, then one DOF per edge, edges sorted by endpoints.
  std::set<std::pair<int, int>> edge_set;
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      int a = tri[k], b = tri[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      edge_set.insert({a, b});
    }
  }
  std::map<std::pair<int, int>, int> edge_dof;
  int next = nv;
  for (const auto& e : edge_set) edge_dof[e] = next++;
  dm.n_dofs = next;

  dm.dof_coords = mesh.vertices;
  dm.dof_coords.resize(dm.n_dofs);
  for (const auto& [e, dof] : edge_dof) {
    dm.dof_coords[dof] = {0.5 * (mesh.vertices[e.first][0] + mesh.vertices[e.second][0]),
                          0.5 * (mesh.vertices[e.first][1] + mesh.vertices[e.second][1])};
  }

  auto edge_of = [&edge_dof](int a, int b) {
    if (a > b) std::swap(a, b);
    return edge_dof.at({a, b});
  };
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    dm.element_dofs[t] = {tri[0],
                          tri[1],
                          tri[2],
                          edge_of(tri[0], tri[1]),
                          edge_of(tri[1], tri[2]),
                          edge_of(tri[2], tri[0])};
  }

  std::set<int> bset;
  for (const auto& e : mesh.boundary_edges) {
    bset.insert(e.v0);
    bset.insert(e.v1);
    bset.insert(edge_of(e.v0, e.v1));
  }
  dm.boundary_dofs.assign(bset.begin(), bset.end());
  return dm;
}

namespace {

void add_orbit3(QuadratureRule& r, double w, double a) {
  const double b = 0.5 * (1.0 - a);
  r.points.push_back({a, b, b});
  r.points.push_back({b, a, b});
  r.points.push_back({b, b, a});
  for (int i = 0; i < 3; ++i) r.weights.push_back(w);
}

void add_orbit6(QuadratureRule& r, double w, double a, double b) {
  const double c = 1.0 - a - b;
  r.points.push_back({a, b, c});
  r.points.push_back({a, c, b});
  r.points.push_back({b, a, c});
  r.points.push_back({b, c, a});
  r.points.push_back({c, a, b});
  r.points.push_back({c, b, a});
  for (int i = 0; i < 6; ++i) r.weights.push_back(w);
}

}  // namespace

QuadratureRule quadrature_rule(int degree) {
  // Symmetric positive rules; weights sum to the reference area 1/2.
  QuadratureRule r;
  if (degree <= 1) {
    r.degree = 1;
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(0.5);
  } else if (degree == 2) {
    r.degree = 2;
    add_orbit3(r, 1.0 / 6.0, 2.0 / 3.0);
  } else if (degree <= 4) {
    r.degree = 4;
    add_orbit3(r, 0.11169079483900573284750350441656, 0.10810301816807022736334149223390);
    add_orbit3(r, 0.05497587182766093381916316086374, 0.81684757298045851308085707945556);
  } else if (degree <= 6) {
    r.degree = 6;
    add_orbit3(r, 0.05839313786318968301264480569279, 0.50142650965817915741672289378596);
    add_orbit3(r, 0.02542245318510340846046840770205, 0.87382197101699554331933679425836);
    add_orbit6(r, 0.04142553780918678596337534220542, 0.05314504984481694735324967163140,
               0.31035245103378440541660773395655);
  } else {
    throw std::invalid_argument("quadrature_rule: degree " + std::to_string(degree) +
                                " not supported (max 6)");
  }
  return r;
}

BasisEval eval_basis(ElementKind kind, const std::array<double, 3>& bary) {
  // Reference coordinates: x = l1, y = l2, so grad(l0) = (-1,-1),
  // grad(l1) = (1,0), grad(l2) = (0,1).
  const double l0 = bary[0], l1 = bary[1], l2 = bary[2];
  static constexpr Vec2 gl[3] = {{-1.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}};

  BasisEval e;
  if (kind == ElementKind::P1) {
    e.n = 3;
    e.values = {l0, l1, l2, 0, 0, 0};
    e.ref_grads = {gl[0], gl[1], gl[2], Vec2{}, Vec2{}, Vec2{}};
    return e;
  }

  e.n = 6;
  e.values = {l0 * (2.0 * l0 - 1.0), l1 * (2.0 * l1 - 1.0), l2 * (2.0 * l2 - 1.0),
              4.0 * l0 * l1,         4.0 * l1 * l2,         4.0 * l2 * l0};
  e.ref_grads = {
      (4.0 * l0 - 1.0) * gl[0],
      (4.0 * l1 - 1.0) * gl[1],
      (4.0 * l2 - 1.0) * gl[2],
      4.0 * (l1 * gl[0] + l0 * gl[1]),
      4.0 * (l2 * gl[1] + l1 * gl[2]),
      4.0 * (l0 * gl[2] + l2 * gl[0]),
  };
  return e;
}

ElementGeometry element_geometry(const Mesh& mesh, int tri) {
  const auto& t = mesh.triangles[tri];
  const auto& p0 = mesh.vertices[t[0]];
  const auto& p1 = mesh.vertices[t[1]];
  const auto& p2 = mesh.vertices[t[2]];
  const double j11 = p1[0] - p0[0], j12 = p2[0] - p0[0];
  const double j21 = p1[1] - p0[1], j22 = p2[1] - p0[1];
  const double det = j11 * j22 - j12 * j21;
  ElementGeometry g;
  g.area = 0.5 * det;
  // J^{-T} = adj(J)^T / det
  g.inv_jacobian_t = {j22 / det, -j21 / det, -j12 / det, j11 / det};
  return g;
}

}  // namespace smectic
