// ============================================================================
// mesh.cpp - structured triangulations of rectangles with boundary tagging
// ============================================================================

#include "smectic/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace smectic {

Mesh build_structured_rect(int nx, const Rect& bounds) {
  if (nx < 1) throw std::invalid_argument("build_structured_rect: nx must be >= 1");
  if (!(bounds.x_max > bounds.x_min) || !(bounds.y_max > bounds.y_min))
    throw std::invalid_argument("build_structured_rect: degenerate or inverted bounds");

  Mesh mesh;
  mesh.bounds = bounds;
  const int nv = nx + 1;
  mesh.vertices.reserve(static_cast<std::size_t>(nv) * nv);
  for (int j = 0; j < nv; ++j) {
    // Exact endpoints; interior nodes by convex combination.
    const double ty = static_cast<double>(j) / nx;
    const double y = (j == 0) ? bounds.y_min : (j == nx ? bounds.y_max
                      : bounds.y_min * (1.0 - ty) + bounds.y_max * ty);
    for (int i = 0; i < nv; ++i) {
      const double tx = static_cast<double>(i) / nx;
      const double x = (i == 0) ? bounds.x_min : (i == nx ? bounds.x_max
                        : bounds.x_min * (1.0 - tx) + bounds.x_max * tx);
      mesh.vertices.push_back({x, y});
    }
  }

  auto vid = [nv](int i, int j) { return j * nv + i; };

  // Two CCW triangles per cell, all diagonals from lower-left to upper-right.
  mesh.triangles.reserve(2u * nx * nx);
  for (int j = 0; j < nx; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
      mesh.triangles.push_back({a, b, c});
      mesh.triangles.push_back({a, c, d});
    }
  }

  // Side markers: 1 bottom, 2 right, 3 top, 4 left.
  for (int i = 0; i < nx; ++i) mesh.boundary_edges.push_back({vid(i, 0), vid(i + 1, 0), 1});
  for (int j = 0; j < nx; ++j) mesh.boundary_edges.push_back({vid(nx, j), vid(nx, j + 1), 2});
  for (int i = 0; i < nx; ++i) mesh.boundary_edges.push_back({vid(i + 1, nx), vid(i, nx), 3});
  for (int j = 0; j < nx; ++j) mesh.boundary_edges.push_back({vid(0, j + 1), vid(0, j), 4});
  return mesh;
}

double triangle_signed_area(const Mesh& mesh, int tri) {
  const auto& t = mesh.triangles[tri];
  const auto& p0 = mesh.vertices[t[0]];
  const auto& p1 = mesh.vertices[t[1]];
  const auto& p2 = mesh.vertices[t[2]];
  return 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]));
}

std::vector<std::string> validate(const Mesh& mesh) {
  std::vector<std::string> violations;
  const int nv = mesh.n_vertices();

  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= nv) {
        violations.push_back("triangle " + std::to_string(t) + ": vertex index out of range");
        return violations;
      }
    }
    if (triangle_signed_area(mesh, t) <= 0.0)
      violations.push_back("triangle " + std::to_string(t) + ": non-positive signed area");
  }

  // Conformity: every undirected edge belongs to 1 (boundary) or 2 (interior)
  // triangles, and the 1-count set must match boundary_edges exactly.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      int a = tri[k], b = tri[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  }
  std::map<std::pair<int, int>, int> tagged;
  for (const auto& e : mesh.boundary_edges) {
    int a = e.v0, b = e.v1;
    if (a > b) std::swap(a, b);
    ++tagged[{a, b}];
  }
  for (const auto& [edge, count] : edge_count) {
    if (count > 2) {
      violations.push_back("edge (" + std::to_string(edge.first) + "," +
                           std::to_string(edge.second) + "): shared by " +
                           std::to_string(count) + " triangles");
    } else if (count == 1 && !tagged.count(edge)) {
      violations.push_back("edge (" + std::to_string(edge.first) + "," +
                           std::to_string(edge.second) + "): untagged boundary edge");
    } else if (count == 2 && tagged.count(edge)) {
      violations.push_back("edge (" + std::to_string(edge.first) + "," +
                           std::to_string(edge.second) + "): interior edge tagged as boundary");
    }
  }
  for (const auto& [edge, count] : tagged) {
    if (count > 1)
      violations.push_back("edge (" + std::to_string(edge.first) + "," +
                           std::to_string(edge.second) + "): tagged more than once");
    if (!edge_count.count(edge))
      violations.push_back("edge (" + std::to_string(edge.first) + "," +
                           std::to_string(edge.second) + "): dangling boundary edge");
  }

  // Boundary edges must close up: every endpoint appears in exactly two edges.
  std::map<int, int> degree;
  for (const auto& e : mesh.boundary_edges) {
    ++degree[e.v0];
    ++degree[e.v1];
  }
  for (const auto& [v, deg] : degree) {
    if (deg != 2)
      violations.push_back("boundary vertex " + std::to_string(v) + ": degree " +
                           std::to_string(deg) + " != 2");
  }
  return violations;
}

}  // namespace smectic
