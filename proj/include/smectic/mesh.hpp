#pragma once

#include <array>
#include <string>
#include <vector>

namespace smectic {

struct Rect {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
};

// Boundary side markers: 1 = bottom, 2 = right, 3 = top, 4 = left.
struct BoundaryEdge {
  int v0 = -1;
  int v1 = -1;
  int marker = 0;
};

// Conforming triangulation of a rectangle. Triangles are counter-clockwise.
// Immutable after construction; safe to share read-only.
struct Mesh {
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<BoundaryEdge> boundary_edges;
  Rect bounds;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
};

// Uniform nx-by-nx grid of cells, each split by the lower-left/upper-right
// diagonal (all diagonals in the same direction). Throws std::invalid_argument
// on nx < 1 or degenerate bounds.
Mesh build_structured_rect(int nx, const Rect& bounds);

double triangle_signed_area(const Mesh& mesh, int tri);

// Empty list iff all mesh invariants hold (positive areas, conformity,
// boundary edges forming closed loops matching the triangulation boundary).
std::vector<std::string> validate(const Mesh& mesh);

}  // namespace smectic
