#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chmhd/forms.hpp"
#include "chmhd/linalg.hpp"

namespace chmhd {

struct SchemeParams {
  double eps = 0.05;
  double lambda = 1.0;
  double s_c = 1.0;
  double dt = 1e-3;
  CoefficientLaw kappa = CoefficientLaw::ExpPos();
  CoefficientLaw nu = CoefficientLaw::ExpNeg();
  CoefficientLaw eta = CoefficientLaw::ExpPos();
  double picard_tol = 1e-10;
  int picard_max = 50;
  bool abort_on_nonconvergence = true;

  void validate() const;
};

// Everything tied to one mesh: dofmaps, constraints, quadrature context, and
// the matrices that never change between steps.
struct Spaces {
  Mesh mesh;
  DofMap q2;  // scalar P2 (phi, mu)
  DofMap p1;  // scalar P1 (pressure)
  DofMap v2;  // vector P2 (u, B)
  EssentialBcs bcs;
  MeanZeroConstraint mean;
  FormContext ctx;        // assembly quadrature (degree 6)
  FormContext ctx_err;    // error/energy quadrature (degree 8)
  SparseMatrix mass_q2, mass_v2, stiff_q2;  // mesh-constant
  SparseMatrix div;                         // d(v, q)
  SparseMatrix mass_p1;                     // pressure mass, for dual norms
  std::optional<LuFactorization> mass_p1_lu;

  explicit Spaces(int n);
};

struct FieldState {
  double t = 0.0;
  Eigen::VectorXd phi, mu;  // Q_h
  Eigen::VectorXd u;        // X_h
  Eigen::VectorXd p;        // M_h
  Eigen::VectorXd B;        // W_h
};

struct StepDiagnostics {
  int picard_iters = 0;
  double final_increment = 0.0;
  double max_solve_residual = 0.0;
  double weak_div = 0.0;  // sup_q |d(u, q)| / ||q||
  double energy = 0.0;    // filled by callers that track it
};

// Time-dependent volumetric sources (zero for free-energy decay runs).
struct Sources {
  std::function<double(double, double, double)> g_phi;                 // (x, y, t)
  std::function<Eigen::Vector2d(double, double, double)> g_u;
  std::function<Eigen::Vector2d(double, double, double)> g_B;

  bool empty() const { return !g_phi && !g_u && !g_B; }
  static Sources none() { return {}; }
};

FieldState initialize(const Spaces& spaces, const ScalarFunction& phi0, const VectorFunction& u0,
                      const VectorFunction& B0);

// One step of the semi-implicit convex-splitting scheme with block
// Gauss-Seidel Picard iteration. prev is the state at t_{n-1}; the returned
// state is at t_{n-1} + dt.
std::pair<FieldState, StepDiagnostics> step(const Spaces& spaces, const FieldState& prev,
                                            const SchemeParams& params, const Sources& sources);

// Building blocks, exposed for verification.
struct ChBlock {
  SparseMatrix a_kappa;   // a_phi with kappa(phi^{n-1})
  SparseMatrix capillary; // trial u -> test psi, kernel grad phi^{n-1}
  Eigen::VectorXd load_phi;
};

std::pair<Eigen::VectorXd, Eigen::VectorXd> ch_block_solve(
    const Spaces& spaces, const ChBlock& block, const SchemeParams& params,
    const Eigen::VectorXd& phi_prev, const Eigen::VectorXd& u_current,
    const Eigen::VectorXd& picard_phi, double* residual = nullptr);

struct MhdBlock {
  SparseMatrix a_f, a_B, convection, c_hat, c_tilde;
  const SparseMatrix* capillary = nullptr;
  Eigen::VectorXd load_u, load_B;
  BlockSystem system;
  std::optional<LuFactorization> factorization;
};

MhdBlock build_mhd_block(const Spaces& spaces, const SchemeParams& params,
                         const FieldState& prev, const Sources& sources, double t_new,
                         const SparseMatrix& capillary);

struct MhdSolution {
  Eigen::VectorXd u, p, B;
  double multiplier = 0.0;
  double residual = 0.0;
};

MhdSolution mhd_block_solve(const Spaces& spaces, MhdBlock& block, const SchemeParams& params,
                            const FieldState& prev, const Eigen::VectorXd& mu_new);

// sup over discrete pressures of |d(u, q)| / ||q||_{L2}
double weak_divergence_norm(const Spaces& spaces, const Eigen::VectorXd& u);

}  // namespace chmhd
