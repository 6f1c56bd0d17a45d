#include "chmhd/space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chmhd {

DofMap build_dofmap(const Mesh& mesh, FieldKind kind) {
  DofMap map;
  map.kind = kind;
  const int nv = mesh.n_vertices();
  const int ne = mesh.n_edges();
  map.n_scalar = kind == FieldKind::ScalarP1 ? nv : nv + ne;
  map.n_dofs = map.n_scalar * map.components();
  map.local_size = (kind == FieldKind::ScalarP1 ? 3 : 6) * map.components();

  map.cell_dofs.resize(mesh.n_triangles());
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    std::vector<int> scalar_dofs;
    const auto& tri = mesh.triangles[t];
    scalar_dofs.assign(tri.begin(), tri.end());
    if (kind != FieldKind::ScalarP1) {
      for (int e = 0; e < 3; ++e) scalar_dofs.push_back(nv + mesh.tri_edges[t][e]);
    }
    if (kind == FieldKind::VectorP2) {
      std::vector<int> dofs;
      dofs.reserve(12);
      for (int d : scalar_dofs) dofs.push_back(d);                 // x component
      for (int d : scalar_dofs) dofs.push_back(map.n_scalar + d);  // y component
      map.cell_dofs[t] = std::move(dofs);
    } else {
      map.cell_dofs[t] = std::move(scalar_dofs);
    }
  }
  return map;
}

EssentialBcs essential_bcs(const Mesh& mesh, const DofMap& velocity_map, const DofMap& magnetic_map) {
  if (velocity_map.kind != FieldKind::VectorP2 || magnetic_map.kind != FieldKind::VectorP2)
    throw std::invalid_argument("essential_bcs: vector-P2 maps expected");

  const int nv = mesh.n_vertices();
  const int ns = velocity_map.n_scalar;

  // scalar node index -> set of sides it lies on (vertices and boundary edge
  // midpoints)
  std::map<int, std::set<Side>> node_sides;
  for (const auto& [v, sides] : boundary_vertex_sides(mesh)) node_sides[v] = sides;
  for (const BoundaryEdge& be : mesh.boundary_edges) node_sides[nv + be.edge].insert(be.side);

  EssentialBcs bcs;
  for (const auto& [node, sides] : node_sides) {
    // velocity: no-slip, both components
    bcs.velocity.dofs.push_back(node);
    bcs.velocity.dofs.push_back(ns + node);
    // magnetic: normal trace only; n is axis-aligned per side
    for (Side s : sides) {
      if (s == Side::Left || s == Side::Right)
        bcs.magnetic.dofs.push_back(node);  // x component
      else
        bcs.magnetic.dofs.push_back(ns + node);  // y component
    }
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(bcs.velocity.dofs);
  dedupe(bcs.magnetic.dofs);
  return bcs;
}

MeanZeroConstraint mean_weights(const Mesh& mesh, const DofMap& p1_map) {
  if (p1_map.kind != FieldKind::ScalarP1)
    throw std::invalid_argument("mean_weights: scalar-P1 map expected");

  MeanZeroConstraint c;
  c.weights = Eigen::VectorXd::Zero(p1_map.n_dofs);
  const ReferenceElement el = reference_element(1);
  const QuadratureRule rule = gauss_rule(2);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const AffineMap map = affine_map(mesh, t);
    for (int q = 0; q < rule.size(); ++q) {
      const BasisEval basis = eval_basis(el, rule.points[q]);
      const double scale = rule.weights[q] * map.det;
      for (int i = 0; i < 3; ++i) c.weights[p1_map.cell_dofs[t][i]] += scale * basis.values[i];
    }
  }
  return c;
}

namespace {

template <typename F>
Eigen::VectorXd interpolate_scalar(const Mesh& mesh, bool p2, const F& f) {
  const int nv = mesh.n_vertices();
  Eigen::VectorXd out(p2 ? nv + mesh.n_edges() : nv);
  for (int v = 0; v < nv; ++v) out[v] = f(mesh.vertices[v].x(), mesh.vertices[v].y());
  if (p2) {
    for (int e = 0; e < mesh.n_edges(); ++e) {
      const Eigen::Vector2d m = mesh.edge_midpoint(e);
      out[nv + e] = f(m.x(), m.y());
    }
  }
  return out;
}

}  // namespace

Eigen::VectorXd interpolate_p1(const Mesh& mesh, const std::function<double(double, double)>& f) {
  return interpolate_scalar(mesh, false, f);
}

Eigen::VectorXd interpolate_p2(const Mesh& mesh, const std::function<double(double, double)>& f) {
  return interpolate_scalar(mesh, true, f);
}

Eigen::VectorXd interpolate_vector_p2(const Mesh& mesh,
                                      const std::function<Eigen::Vector2d(double, double)>& f) {
  const Eigen::VectorXd x =
      interpolate_scalar(mesh, true, [&](double a, double b) { return f(a, b).x(); });
  const Eigen::VectorXd y =
      interpolate_scalar(mesh, true, [&](double a, double b) { return f(a, b).y(); });
  Eigen::VectorXd out(2 * x.size());
  out << x, y;
  return out;
}

}  // namespace chmhd
