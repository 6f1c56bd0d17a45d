#pragma once

// Brute-force dense assembly oracle. Re-derives the Lagrange bases per element
// by inverting a physical-coordinate Vandermonde matrix (monomials 1, x, y,
// x^2, xy, y^2), so it shares no basis or mapping code with the library
// assemblers. Every form is accumulated into a dense matrix by direct
// quadrature of its defining integral.

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "chmhd/fem.hpp"
#include "chmhd/forms.hpp"
#include "chmhd/mesh.hpp"
#include "chmhd/space.hpp"

namespace chmhd::oracle {

struct ElementBasis {
  // columns of coeff are the monomial coefficients of each shape function
  Eigen::MatrixXd coeff;  // n_mono x n_shape
  int degree;

  static ElementBasis build(const Mesh& mesh, int tri, int degree) {
    const auto& t = mesh.triangles[tri];
    std::vector<Eigen::Vector2d> nodes = {mesh.vertices[t[0]], mesh.vertices[t[1]],
                                          mesh.vertices[t[2]]};
    if (degree == 2) {
      for (int e = 0; e < 3; ++e) {
        const Eigen::Vector2d a = mesh.vertices[t[e]];
        const Eigen::Vector2d b = mesh.vertices[t[(e + 1) % 3]];
        nodes.push_back(0.5 * (a + b));
      }
    }
    const int n = static_cast<int>(nodes.size());
    Eigen::MatrixXd V(n, n);
    for (int i = 0; i < n; ++i) {
      const double x = nodes[i].x(), y = nodes[i].y();
      V(i, 0) = 1.0;
      V(i, 1) = x;
      V(i, 2) = y;
      if (degree == 2) {
        V(i, 3) = x * x;
        V(i, 4) = x * y;
        V(i, 5) = y * y;
      }
    }
    ElementBasis eb;
    eb.degree = degree;
    eb.coeff = V.inverse();
    return eb;
  }

  Eigen::VectorXd values(double x, double y) const {
    Eigen::VectorXd mono(coeff.rows());
    mono[0] = 1.0;
    mono[1] = x;
    mono[2] = y;
    if (degree == 2) {
      mono[3] = x * x;
      mono[4] = x * y;
      mono[5] = y * y;
    }
    return coeff.transpose() * mono;
  }

  Eigen::MatrixXd gradients(double x, double y) const {  // n_shape x 2
    Eigen::MatrixXd dm(coeff.rows(), 2);
    dm.setZero();
    dm(1, 0) = 1.0;
    dm(2, 1) = 1.0;
    if (degree == 2) {
      dm(3, 0) = 2.0 * x;
      dm(4, 0) = y;
      dm(4, 1) = x;
      dm(5, 1) = 2.0 * y;
    }
    return (dm.transpose() * coeff).transpose();
  }
};

struct QuadPoint {
  double x, y, w;
};

// physical quadrature points via the vertices directly (shoelace area)
inline std::vector<QuadPoint> physical_points(const Mesh& mesh, int tri, const QuadratureRule& rule) {
  const auto& t = mesh.triangles[tri];
  const Eigen::Vector2d a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], c = mesh.vertices[t[2]];
  const double area2 =
      (b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y());
  std::vector<QuadPoint> out;
  for (int q = 0; q < rule.size(); ++q) {
    const double xi = rule.points[q].x(), eta = rule.points[q].y();
    const Eigen::Vector2d p = a + xi * (b - a) + eta * (c - a);
    out.push_back({p.x(), p.y(), rule.weights[q] * area2});
  }
  return out;
}

// kind of per-qp element kernel: receives shape values/gradients for row and
// column spaces and accumulates local(i,j)
template <typename Kernel>
Eigen::MatrixXd assemble_dense(const Mesh& mesh, const DofMap& row_map, const DofMap& col_map,
                               int quad_degree, Kernel&& kernel) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(row_map.n_dofs, col_map.n_dofs);
  const QuadratureRule rule = gauss_rule(quad_degree);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const ElementBasis row_eb = ElementBasis::build(mesh, t, row_map.degree());
    const ElementBasis col_eb = ElementBasis::build(mesh, t, col_map.degree());
    for (const QuadPoint& qp : physical_points(mesh, t, rule)) {
      const Eigen::VectorXd rv = row_eb.values(qp.x, qp.y);
      const Eigen::MatrixXd rg = row_eb.gradients(qp.x, qp.y);
      const Eigen::VectorXd cv = col_eb.values(qp.x, qp.y);
      const Eigen::MatrixXd cg = col_eb.gradients(qp.x, qp.y);
      const auto& rd = row_map.cell_dofs[t];
      const auto& cd = col_map.cell_dofs[t];
      for (int i = 0; i < static_cast<int>(rd.size()); ++i)
        for (int j = 0; j < static_cast<int>(cd.size()); ++j)
          A(rd[i], cd[j]) += qp.w * kernel(t, qp, i, rv, rg, j, cv, cg);
    }
  }
  return A;
}

// vector-P2 local dof helpers (component-major, scalar shapes 0..5)
inline int vc(int k) { return k < 6 ? 0 : 1; }
inline int vs(int k) { return k < 6 ? k : k - 6; }

inline double eval_scalar(const ElementBasis& eb, const DofMap& map, const Eigen::VectorXd& coeffs,
                          int tri, double x, double y) {
  const Eigen::VectorXd v = eb.values(x, y);
  double s = 0.0;
  for (int k = 0; k < static_cast<int>(map.cell_dofs[tri].size()); ++k)
    s += coeffs[map.cell_dofs[tri][k]] * v[k];
  return s;
}

}  // namespace chmhd::oracle
