#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "chmhd/space.hpp"

namespace chmhd {

// Compressed-row sparse matrix (Eigen row-major keeps column indices sorted
// and unique per row).
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets);

// Sparse LU with partial pivoting. Throws std::runtime_error on numerically
// singular input, naming the offending stage.
class LuFactorization {
 public:
  explicit LuFactorization(const SparseMatrix& matrix);
  ~LuFactorization();
  LuFactorization(LuFactorization&&) noexcept;
  LuFactorization& operator=(LuFactorization&&) noexcept;

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

LuFactorization lu_factor(const SparseMatrix& matrix);

// One rectangular block of a monolithic system, placed at (row_offset,
// col_offset), scaled, optionally transposed.
struct BlockEntry {
  int row_offset;
  int col_offset;
  const SparseMatrix* matrix;
  double scale = 1.0;
  bool transpose = false;
};

struct BlockSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  std::vector<char> constrained;  // per-dof flag, essential BC rows/cols
};

// Assembles the monolithic matrix, eliminates homogeneous essential BCs
// symmetrically (unit diagonal, zero rhs), and, when mean_constraint is given,
// borders the system with a Lagrange-multiplier row/column acting on
// [mean_offset, mean_offset + weights.size()). The bordered system has
// dimension n_dofs + 1.
BlockSystem compose_block(int n_dofs, const std::vector<BlockEntry>& blocks,
                          const std::vector<const EssentialBc*>& bcs,
                          const std::vector<int>& bc_offsets,
                          const MeanZeroConstraint* mean_constraint = nullptr,
                          int mean_offset = 0);

void add_to_rhs(BlockSystem& system, int offset, const Eigen::VectorXd& values);

// ||Ax - b|| / (||A|| ||x|| + ||b||), infinity norms.
double relative_residual(const SparseMatrix& A, const Eigen::VectorXd& x, const Eigen::VectorXd& b);

}  // namespace chmhd
