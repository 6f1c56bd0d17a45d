#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Core>

namespace chmhd {

enum class Side : std::uint8_t { Left, Right, Bottom, Top };

struct Edge {
  int v0, v1;              // v0 < v1
  int tri_a = -1;          // first incident triangle
  int tri_b = -1;          // second incident triangle, -1 on boundary
  bool on_boundary() const { return tri_b < 0; }
};

struct BoundaryEdge {
  int edge;                // index into Mesh::edges
  Side side;
};

// Structured triangulation of the unit square. Each grid cell is split by the
// lower-left -> upper-right diagonal; all triangles are CCW. Immutable after
// construction.
struct Mesh {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<Edge> edges;
  std::vector<BoundaryEdge> boundary_edges;
  // triangle-local edge indices: edge t_edges[k][e] connects local vertices
  // (e, (e+1)%3) of triangle k
  std::vector<std::array<int, 3>> tri_edges;
  double h = 0.0;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }

  double signed_area(int tri) const;
  Eigen::Vector2d edge_midpoint(int edge) const;
};

Mesh unit_square_mesh(int n);

// vertex index -> sides it lies on; interior vertices are absent.
std::map<int, std::set<Side>> boundary_vertex_sides(const Mesh& mesh);

}  // namespace chmhd
