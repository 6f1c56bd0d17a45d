#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chmhd/linalg.hpp"
#include "chmhd/space.hpp"

namespace chmhd {

// kappa(phi) = e^phi, nu(phi) = e^{-phi}, eta(phi) = e^phi, or a positive
// constant. Evaluation aborts if the value is not strictly positive.
struct CoefficientLaw {
  enum class Kind { Constant, ExpPos, ExpNeg };
  Kind kind = Kind::Constant;
  double constant = 1.0;

  static CoefficientLaw Constant(double c) { return {Kind::Constant, c}; }
  static CoefficientLaw ExpPos() { return {Kind::ExpPos, 0.0}; }
  static CoefficientLaw ExpNeg() { return {Kind::ExpNeg, 0.0}; }

  double operator()(double phi) const;
};

struct DiscreteField {
  const DofMap* dofmap;
  Eigen::VectorXd coeffs;
};

// Precomputed quadrature geometry for one mesh: basis tables at the rule's
// points plus per-element Jacobian data and physical basis gradients.
class FormContext {
 public:
  FormContext(const Mesh& mesh, int quadrature_degree);

  const Mesh& mesh() const { return *mesh_; }
  const QuadratureRule& rule() const { return rule_; }
  int n_qp() const { return rule_.size(); }

  const BasisEval& p1_ref(int q) const { return p1_ref_[q]; }
  const BasisEval& p2_ref(int q) const { return p2_ref_[q]; }
  double weight_jac(int tri, int q) const { return rule_.weights[q] * det_[tri]; }
  const Eigen::Matrix<double, 3, 2>& p1_grad(int tri, int q) const { return p1_grad_[tri * rule_.size() + q]; }
  const Eigen::Matrix<double, 6, 2>& p2_grad(int tri, int q) const { return p2_grad_[tri * rule_.size() + q]; }
  Eigen::Vector2d physical_point(int tri, int q) const;

  // scalar P2 field evaluation at a quadrature point
  double eval_p2(const Eigen::VectorXd& coeffs, const DofMap& map, int tri, int q) const;
  Eigen::Vector2d eval_p2_grad(const Eigen::VectorXd& coeffs, const DofMap& map, int tri, int q) const;
  Eigen::Vector2d eval_vec_p2(const Eigen::VectorXd& coeffs, const DofMap& map, int tri, int q) const;

 private:
  const Mesh* mesh_;
  QuadratureRule rule_;
  std::vector<BasisEval> p1_ref_, p2_ref_;
  std::vector<double> det_;
  std::vector<AffineMap> maps_;
  std::vector<Eigen::Matrix<double, 3, 2>> p1_grad_;
  std::vector<Eigen::Matrix<double, 6, 2>> p2_grad_;
};

// L2 mass matrix for any field kind.
SparseMatrix assemble_mass(const FormContext& ctx, const DofMap& map);

// (kappa(phi_prev) grad trial, grad test) on scalar P2.
SparseMatrix assemble_a_phi(const FormContext& ctx, const DofMap& map, const CoefficientLaw& kappa,
                            const DiscreteField& phi_prev);

// (2 nu(phi_prev) D(trial) : D(test)) on vector P2.
SparseMatrix assemble_a_f(const FormContext& ctx, const DofMap& map, const CoefficientLaw& nu,
                          const DiscreteField& phi_prev);

// (eta curl trial, curl test) + (eta div trial, div test) on vector P2.
SparseMatrix assemble_a_B(const FormContext& ctx, const DofMap& map, const CoefficientLaw& eta,
                          const DiscreteField& phi_prev);

// d(v, q) = (q, div v): rows = pressure test space, cols = velocity trial.
SparseMatrix assemble_d(const FormContext& ctx, const DofMap& velocity_map, const DofMap& pressure_map);

// Skew-symmetrized convection with fixed advecting field w:
// entry(i,j) = 1/2 [((w.grad) x_j, x_i) - ((w.grad) x_i, x_j)].
SparseMatrix assemble_b(const FormContext& ctx, const DofMap& map, const DiscreteField& advecting);

// c_hat(H_lag, trial B, test v) = (H_lag x curl B, v) with lagged H.
SparseMatrix assemble_c_hat(const FormContext& ctx, const DofMap& map, const DiscreteField& magnetic_lag);

// c_tilde(trial u, B_lag, test H) = ((u x B_lag), curl H) with lagged B.
SparseMatrix assemble_c_tilde(const FormContext& ctx, const DofMap& map, const DiscreteField& magnetic_lag);

// Capillary coupling with kernel grad phi_prev: rows = scalar P2 test psi,
// cols = vector P2 trial u; entry(i,j) = (grad phi_prev . x_j, psi_i).
// The transpose gives the momentum right-hand-side map mu -> (mu grad
// phi_prev, v).
SparseMatrix assemble_capillary(const FormContext& ctx, const DofMap& velocity_map,
                                const DofMap& scalar_map, const DiscreteField& phi_prev);

// Mass matrix weighted by phi_iter^2 (Picard linearization of the cubic).
SparseMatrix assemble_cubic(const FormContext& ctx, const DofMap& map, const DiscreteField& phi_iter);

using ScalarFunction = std::function<double(double, double)>;
using VectorFunction = std::function<Eigen::Vector2d(double, double)>;

Eigen::VectorXd assemble_load(const FormContext& ctx, const DofMap& map, const ScalarFunction& f);
Eigen::VectorXd assemble_load(const FormContext& ctx, const DofMap& map, const VectorFunction& f);

}  // namespace chmhd
