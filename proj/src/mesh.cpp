#include "chmhd/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace chmhd {

double Mesh::signed_area(int tri) const {
  const auto& t = triangles[tri];
  const Eigen::Vector2d& a = vertices[t[0]];
  const Eigen::Vector2d& b = vertices[t[1]];
  const Eigen::Vector2d& c = vertices[t[2]];
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

Eigen::Vector2d Mesh::edge_midpoint(int edge) const {
  const Edge& e = edges[edge];
  return 0.5 * (vertices[e.v0] + vertices[e.v1]);
}

namespace {

Side classify_boundary_edge(const Mesh& mesh, const Edge& e) {
  const Eigen::Vector2d& a = mesh.vertices[e.v0];
  const Eigen::Vector2d& b = mesh.vertices[e.v1];
  const double tol = 1e-12;
  if (std::abs(a.x()) < tol && std::abs(b.x()) < tol) return Side::Left;
  if (std::abs(a.x() - 1.0) < tol && std::abs(b.x() - 1.0) < tol) return Side::Right;
  if (std::abs(a.y()) < tol && std::abs(b.y()) < tol) return Side::Bottom;
  if (std::abs(a.y() - 1.0) < tol && std::abs(b.y() - 1.0) < tol) return Side::Top;
  throw std::logic_error("boundary edge not on a side of the unit square");
}

}  // namespace

Mesh unit_square_mesh(int n) {
  if (n < 1) throw std::invalid_argument("unit_square_mesh: n must be >= 1");

  Mesh mesh;
  mesh.h = 1.0 / n;

  const int nv = n + 1;
  mesh.vertices.reserve(nv * nv);
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nv; ++i)
      mesh.vertices.emplace_back(double(i) / n, double(j) / n);

  auto vid = [nv](int i, int j) { return j * nv + i; };

  mesh.triangles.reserve(2 * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // diagonal from (i,j) to (i+1,j+1)
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }

  // edge table keyed by sorted vertex pair; insertion order fixes edge numbering
  std::map<std::pair<int, int>, int> edge_index;
  mesh.tri_edges.resize(mesh.triangles.size());
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      auto it = edge_index.find({a, b});
      int idx;
      if (it == edge_index.end()) {
        idx = mesh.n_edges();
        edge_index.emplace(std::make_pair(a, b), idx);
        mesh.edges.push_back({a, b, t, -1});
      } else {
        idx = it->second;
        mesh.edges[idx].tri_b = t;
      }
      mesh.tri_edges[t][e] = idx;
    }
  }

  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (mesh.edges[e].on_boundary())
      mesh.boundary_edges.push_back({e, classify_boundary_edge(mesh, mesh.edges[e])});
  }

  return mesh;
}

std::map<int, std::set<Side>> boundary_vertex_sides(const Mesh& mesh) {
  std::map<int, std::set<Side>> out;
  const double tol = 1e-12;
  for (int v = 0; v < mesh.n_vertices(); ++v) {
    const Eigen::Vector2d& p = mesh.vertices[v];
    std::set<Side> sides;
    if (std::abs(p.x()) < tol) sides.insert(Side::Left);
    if (std::abs(p.x() - 1.0) < tol) sides.insert(Side::Right);
    if (std::abs(p.y()) < tol) sides.insert(Side::Bottom);
    if (std::abs(p.y() - 1.0) < tol) sides.insert(Side::Top);
    if (!sides.empty()) out.emplace(v, std::move(sides));
  }
  return out;
}

}  // namespace chmhd
