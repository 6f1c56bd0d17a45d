#pragma once

#include <vector>

#include <Eigen/Core>

#include "chmhd/mesh.hpp"

namespace chmhd {

// Lagrange element on the reference triangle (0,0)-(1,0)-(0,1).
// P2 node order: 3 vertices, then midpoints of edges (01), (12), (20).
struct ReferenceElement {
  int degree;      // 1 or 2
  int node_count;  // 3 or 6
  std::vector<Eigen::Vector2d> nodes;
};

ReferenceElement reference_element(int degree);

struct BasisEval {
  Eigen::VectorXd values;                 // node_count
  Eigen::Matrix<double, Eigen::Dynamic, 2> gradients;  // node_count x 2, reference coords
};

BasisEval eval_basis(const ReferenceElement& element, const Eigen::Vector2d& point);

struct QuadratureRule {
  int degree;  // exact for total polynomial degree <= degree
  std::vector<Eigen::Vector2d> points;
  std::vector<double> weights;  // sum to 1/2
  int size() const { return static_cast<int>(points.size()); }
};

// Smallest tabulated rule exact to at least min_degree (1 <= min_degree <= 10).
QuadratureRule gauss_rule(int min_degree);

struct AffineMap {
  Eigen::Matrix2d jacobian;
  Eigen::Matrix2d inv_transpose;
  double det;  // twice the triangle area, > 0
  Eigen::Vector2d origin;

  Eigen::Vector2d to_physical(const Eigen::Vector2d& ref) const {
    return origin + jacobian * ref;
  }
};

AffineMap affine_map(const Mesh& mesh, int tri);

// grad_x N = J^{-T} grad_xi N, row-wise.
Eigen::Matrix<double, Eigen::Dynamic, 2> physical_gradients(
    const AffineMap& map, const Eigen::Matrix<double, Eigen::Dynamic, 2>& ref_gradients);

}  // namespace chmhd
