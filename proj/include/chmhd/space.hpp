#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "chmhd/fem.hpp"
#include "chmhd/mesh.hpp"

namespace chmhd {

enum class FieldKind { ScalarP1, ScalarP2, VectorP2 };

// Global numbering: vertices first (mesh order), then edges (mesh order).
// Vector fields are component-major: all x-dofs, then all y-dofs.
struct DofMap {
  FieldKind kind;
  int n_scalar = 0;  // scalar dofs per component
  int n_dofs = 0;
  int local_size = 0;  // dofs per element
  std::vector<std::vector<int>> cell_dofs;  // per triangle

  int components() const { return kind == FieldKind::VectorP2 ? 2 : 1; }
  int degree() const { return kind == FieldKind::ScalarP1 ? 1 : 2; }
};

DofMap build_dofmap(const Mesh& mesh, FieldKind kind);

// Homogeneous Dirichlet constraints (all prescribed values are zero).
struct EssentialBc {
  std::vector<int> dofs;
};

struct EssentialBcs {
  EssentialBc velocity;  // both components at every boundary node
  EssentialBc magnetic;  // normal component per side, both at corners
};

EssentialBcs essential_bcs(const Mesh& mesh, const DofMap& velocity_map, const DofMap& magnetic_map);

// w_j = integral of the j-th P1 basis function; w^T p = mean of p_h on the
// unit square.
struct MeanZeroConstraint {
  Eigen::VectorXd weights;
};

MeanZeroConstraint mean_weights(const Mesh& mesh, const DofMap& p1_map);

// Nodal interpolation helpers. P2 nodes are vertices plus edge midpoints.
Eigen::VectorXd interpolate_p1(const Mesh& mesh, const std::function<double(double, double)>& f);
Eigen::VectorXd interpolate_p2(const Mesh& mesh, const std::function<double(double, double)>& f);
Eigen::VectorXd interpolate_vector_p2(const Mesh& mesh,
                                      const std::function<Eigen::Vector2d(double, double)>& f);

}  // namespace chmhd
