#include "chmhd/linalg.hpp"

#include <stdexcept>

#include <Eigen/SparseLU>

namespace chmhd {

SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

struct LuFactorization::Impl {
  // SparseLU wants column-major storage
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
};

LuFactorization::LuFactorization(const SparseMatrix& matrix) : impl_(std::make_unique<Impl>()) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("lu_factor: matrix must be square");
  Eigen::SparseMatrix<double> col_major(matrix);
  impl_->solver.compute(col_major);
  if (impl_->solver.info() != Eigen::Success)
    throw std::runtime_error("lu_factor: numerically singular matrix (" +
                             impl_->solver.lastErrorMessage() + ")");
}

LuFactorization::~LuFactorization() = default;
LuFactorization::LuFactorization(LuFactorization&&) noexcept = default;
LuFactorization& LuFactorization::operator=(LuFactorization&&) noexcept = default;

Eigen::VectorXd LuFactorization::solve(const Eigen::VectorXd& rhs) const {
  Eigen::VectorXd x = impl_->solver.solve(rhs);
  if (impl_->solver.info() != Eigen::Success)
    throw std::runtime_error("lu solve failed");
  return x;
}

LuFactorization lu_factor(const SparseMatrix& matrix) { return LuFactorization(matrix); }

BlockSystem compose_block(int n_dofs, const std::vector<BlockEntry>& blocks,
                          const std::vector<const EssentialBc*>& bcs,
                          const std::vector<int>& bc_offsets,
                          const MeanZeroConstraint* mean_constraint, int mean_offset) {
  if (bcs.size() != bc_offsets.size())
    throw std::invalid_argument("compose_block: bcs and offsets mismatch");

  const int n_total = n_dofs + (mean_constraint ? 1 : 0);

  BlockSystem sys;
  sys.constrained.assign(n_total, 0);
  for (size_t k = 0; k < bcs.size(); ++k)
    for (int d : bcs[k]->dofs) {
      const int g = bc_offsets[k] + d;
      if (g < 0 || g >= n_dofs) throw std::out_of_range("compose_block: BC dof out of range");
      sys.constrained[g] = 1;
    }

  std::vector<Triplet> trip;
  for (const BlockEntry& b : blocks) {
    const SparseMatrix& m = *b.matrix;
    for (int row = 0; row < m.outerSize(); ++row) {
      for (SparseMatrix::InnerIterator it(m, row); it; ++it) {
        int r = b.row_offset + (b.transpose ? it.col() : it.row());
        int c = b.col_offset + (b.transpose ? it.row() : it.col());
        if (r >= n_dofs || c >= n_dofs) throw std::out_of_range("compose_block: block exceeds system");
        // symmetric elimination with zero prescribed values: drop constrained
        // rows and columns entirely
        if (sys.constrained[r] || sys.constrained[c]) continue;
        trip.emplace_back(r, c, b.scale * it.value());
      }
    }
  }
  for (int d = 0; d < n_total; ++d)
    if (sys.constrained[d]) trip.emplace_back(d, d, 1.0);

  if (mean_constraint) {
    const Eigen::VectorXd& w = mean_constraint->weights;
    for (int j = 0; j < w.size(); ++j) {
      const int g = mean_offset + j;
      if (sys.constrained[g]) continue;
      trip.emplace_back(n_dofs, g, w[j]);
      trip.emplace_back(g, n_dofs, w[j]);
    }
  }

  sys.matrix = from_triplets(n_total, n_total, trip);
  sys.rhs = Eigen::VectorXd::Zero(n_total);
  return sys;
}

void add_to_rhs(BlockSystem& system, int offset, const Eigen::VectorXd& values) {
  for (int i = 0; i < values.size(); ++i) {
    const int g = offset + i;
    if (!system.constrained[g]) system.rhs[g] += values[i];
  }
}

double relative_residual(const SparseMatrix& A, const Eigen::VectorXd& x, const Eigen::VectorXd& b) {
  const Eigen::VectorXd r = A * x - b;
  double norm_a = 0.0;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(A, k); it; ++it) norm_a = std::max(norm_a, std::abs(it.value()));
  const double denom = norm_a * x.lpNorm<Eigen::Infinity>() + b.lpNorm<Eigen::Infinity>();
  return denom > 0.0 ? r.lpNorm<Eigen::Infinity>() / denom : r.lpNorm<Eigen::Infinity>();
}

}  // namespace chmhd
