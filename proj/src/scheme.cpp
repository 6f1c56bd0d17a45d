#include "chmhd/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace chmhd {

void SchemeParams::validate() const {
  if (!(eps > 0.0) || !(lambda > 0.0) || !(s_c > 0.0) || !(dt > 0.0))
    throw std::invalid_argument("scheme parameters eps, lambda, s_c, dt must be positive");
  if (!(picard_tol > 0.0 && picard_tol < 1.0))
    throw std::invalid_argument("picard_tol must lie in (0, 1)");
  if (picard_max < 1) throw std::invalid_argument("picard_max must be >= 1");
}

Spaces::Spaces(int n)
    : mesh(unit_square_mesh(n)),
      q2(build_dofmap(mesh, FieldKind::ScalarP2)),
      p1(build_dofmap(mesh, FieldKind::ScalarP1)),
      v2(build_dofmap(mesh, FieldKind::VectorP2)),
      bcs(essential_bcs(mesh, v2, v2)),
      mean(mean_weights(mesh, p1)),
      ctx(mesh, 6),
      ctx_err(mesh, 8) {
  mass_q2 = assemble_mass(ctx, q2);
  mass_v2 = assemble_mass(ctx, v2);
  DiscreteField zero{&q2, Eigen::VectorXd::Zero(q2.n_dofs)};
  stiff_q2 = assemble_a_phi(ctx, q2, CoefficientLaw::Constant(1.0), zero);
  div = assemble_d(ctx, v2, p1);
  mass_p1 = assemble_mass(ctx, p1);
  mass_p1_lu.emplace(mass_p1);
}

FieldState initialize(const Spaces& spaces, const ScalarFunction& phi0, const VectorFunction& u0,
                      const VectorFunction& B0) {
  FieldState s;
  s.t = 0.0;
  s.phi = interpolate_p2(spaces.mesh, phi0);
  s.mu = Eigen::VectorXd::Zero(spaces.q2.n_dofs);
  s.u = interpolate_vector_p2(spaces.mesh, u0);
  s.p = Eigen::VectorXd::Zero(spaces.p1.n_dofs);
  s.B = interpolate_vector_p2(spaces.mesh, B0);
  // initial data must satisfy the essential constraints
  const int ns = spaces.v2.n_scalar;
  for (int d : spaces.bcs.velocity.dofs) s.u[d] = 0.0;
  for (int d : spaces.bcs.magnetic.dofs) s.B[d] = 0.0;
  (void)ns;
  return s;
}

namespace {

// one step of iterative refinement keeps algebraic residuals near machine
// precision, which the weak-divergence diagnostic depends on
Eigen::VectorXd solve_refined(const LuFactorization& lu, const SparseMatrix& A,
                              const Eigen::VectorXd& b, double* residual) {
  Eigen::VectorXd x = lu.solve(b);
  x += lu.solve(b - A * x);
  if (residual) *residual = std::max(*residual, relative_residual(A, x, b));
  return x;
}

double relative_increment(const Eigen::VectorXd& next, const Eigen::VectorXd& prev) {
  return (next - prev).norm() / std::max(next.norm(), 1.0);
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> ch_block_solve(
    const Spaces& spaces, const ChBlock& block, const SchemeParams& params,
    const Eigen::VectorXd& phi_prev, const Eigen::VectorXd& u_current,
    const Eigen::VectorXd& picard_phi, double* residual) {
  const int nq = spaces.q2.n_dofs;
  DiscreteField phi_it{&spaces.q2, picard_phi};
  const SparseMatrix cubic = assemble_cubic(spaces.ctx, spaces.q2, phi_it);

  const double inv_dt = 1.0 / params.dt;
  const double inv_eps = 1.0 / params.eps;
  std::vector<BlockEntry> blocks = {
      {0, 0, &spaces.mass_q2, inv_dt},
      {0, nq, &block.a_kappa, params.eps},
      {nq, 0, &spaces.stiff_q2, params.eps},
      {nq, 0, &cubic, inv_eps},
      {nq, nq, &spaces.mass_q2, -1.0},
  };
  BlockSystem sys = compose_block(2 * nq, blocks, {}, {});
  sys.rhs.head(nq) = inv_dt * (spaces.mass_q2 * phi_prev) + block.load_phi -
                     block.capillary * u_current;
  sys.rhs.segment(nq, nq) = inv_eps * (spaces.mass_q2 * phi_prev);

  const LuFactorization lu(sys.matrix);
  const Eigen::VectorXd x = solve_refined(lu, sys.matrix, sys.rhs, residual);
  return {x.head(nq), x.tail(nq)};
}

MhdBlock build_mhd_block(const Spaces& spaces, const SchemeParams& params, const FieldState& prev,
                         const Sources& sources, double t_new, const SparseMatrix& capillary) {
  const int nv = spaces.v2.n_dofs;
  const int np = spaces.p1.n_dofs;
  const int n_dofs = 2 * nv + np;

  MhdBlock block;
  DiscreteField phi_prev{&spaces.q2, prev.phi};
  DiscreteField u_prev{&spaces.v2, prev.u};
  DiscreteField B_prev{&spaces.v2, prev.B};
  block.a_f = assemble_a_f(spaces.ctx, spaces.v2, params.nu, phi_prev);
  block.a_B = assemble_a_B(spaces.ctx, spaces.v2, params.eta, phi_prev);
  block.convection = assemble_b(spaces.ctx, spaces.v2, u_prev);
  block.c_hat = assemble_c_hat(spaces.ctx, spaces.v2, B_prev);
  block.c_tilde = assemble_c_tilde(spaces.ctx, spaces.v2, B_prev);
  block.capillary = &capillary;

  if (sources.g_u)
    block.load_u = assemble_load(spaces.ctx, spaces.v2, VectorFunction([&](double x, double y) {
                                   return sources.g_u(x, y, t_new);
                                 }));
  else
    block.load_u = Eigen::VectorXd::Zero(nv);
  if (sources.g_B)
    block.load_B = assemble_load(spaces.ctx, spaces.v2, VectorFunction([&](double x, double y) {
                                   return sources.g_B(x, y, t_new);
                                 }));
  else
    block.load_B = Eigen::VectorXd::Zero(nv);

  const double inv_dt = 1.0 / params.dt;
  const int p_off = nv;
  const int b_off = nv + np;
  std::vector<BlockEntry> entries = {
      {0, 0, &spaces.mass_v2, inv_dt},
      {0, 0, &block.a_f},
      {0, 0, &block.convection},
      {0, b_off, &block.c_hat, params.s_c},
      {0, p_off, &spaces.div, -1.0, true},
      {p_off, 0, &spaces.div},
      {b_off, b_off, &spaces.mass_v2, inv_dt},
      {b_off, b_off, &block.a_B},
      {b_off, 0, &block.c_tilde, -1.0},
  };
  block.system = compose_block(n_dofs, entries, {&spaces.bcs.velocity, &spaces.bcs.magnetic},
                               {0, b_off}, &spaces.mean, p_off);
  block.factorization.emplace(block.system.matrix);
  return block;
}

MhdSolution mhd_block_solve(const Spaces& spaces, MhdBlock& block, const SchemeParams& params,
                            const FieldState& prev, const Eigen::VectorXd& mu_new) {
  const int nv = spaces.v2.n_dofs;
  const int np = spaces.p1.n_dofs;
  const double inv_dt = 1.0 / params.dt;

  BlockSystem& sys = block.system;
  sys.rhs.setZero();
  add_to_rhs(sys, 0, inv_dt * (spaces.mass_v2 * prev.u) + block.load_u +
                        params.lambda * (block.capillary->transpose() * mu_new));
  add_to_rhs(sys, nv + np, inv_dt * (spaces.mass_v2 * prev.B) + block.load_B);

  MhdSolution sol;
  const Eigen::VectorXd x = solve_refined(*block.factorization, sys.matrix, sys.rhs, &sol.residual);
  sol.u = x.head(nv);
  sol.p = x.segment(nv, np);
  sol.B = x.segment(nv + np, nv);
  sol.multiplier = x[2 * nv + np];
  return sol;
}

double weak_divergence_norm(const Spaces& spaces, const Eigen::VectorXd& u) {
  const Eigen::VectorXd r = spaces.div * u;
  // sup_q (r, q)/||q||_{L2} = sqrt(r^T M^{-1} r)
  const Eigen::VectorXd z = spaces.mass_p1_lu->solve(r);
  return std::sqrt(std::max(0.0, r.dot(z)));
}

std::pair<FieldState, StepDiagnostics> step(const Spaces& spaces, const FieldState& prev,
                                            const SchemeParams& params, const Sources& sources) {
  params.validate();
  const double t_new = prev.t + params.dt;

  DiscreteField phi_prev{&spaces.q2, prev.phi};
  ChBlock ch;
  ch.a_kappa = assemble_a_phi(spaces.ctx, spaces.q2, params.kappa, phi_prev);
  ch.capillary = assemble_capillary(spaces.ctx, spaces.v2, spaces.q2, phi_prev);
  if (sources.g_phi)
    ch.load_phi = assemble_load(spaces.ctx, spaces.q2, ScalarFunction([&](double x, double y) {
                                  return sources.g_phi(x, y, t_new);
                                }));
  else
    ch.load_phi = Eigen::VectorXd::Zero(spaces.q2.n_dofs);

  MhdBlock mhd = build_mhd_block(spaces, params, prev, sources, t_new, ch.capillary);

  FieldState next = prev;
  next.t = t_new;

  // One sweep (CH solve, then MHD solve with the fresh mu) is a fixed-point
  // map whose solution is the fully implicit step. The raw sweep can be
  // expansive for large dt (the cubic linearization amplifies by roughly
  // 2 dt kappa |xi|^2 phi^2 per mode), so the iterate is advanced by an
  // Aitken-relaxed update; the accepted state is always an exact sweep output.
  const int nq = spaces.q2.n_dofs;
  const int nv = spaces.v2.n_dofs;
  const int np = spaces.p1.n_dofs;
  auto concat = [&](const FieldState& s) {
    Eigen::VectorXd v(2 * nq + 2 * nv + np);
    v << s.phi, s.mu, s.u, s.p, s.B;
    return v;
  };

  StepDiagnostics diag;
  bool converged = false;
  double omega = 1.0;
  Eigen::VectorXd d_prev;
  for (int k = 1; k <= params.picard_max; ++k) {
    FieldState proposal = next;
    std::tie(proposal.phi, proposal.mu) = ch_block_solve(spaces, ch, params, prev.phi, next.u,
                                                         next.phi, &diag.max_solve_residual);
    MhdSolution sol = mhd_block_solve(spaces, mhd, params, prev, proposal.mu);
    diag.max_solve_residual = std::max(diag.max_solve_residual, sol.residual);
    proposal.u = std::move(sol.u);
    proposal.p = std::move(sol.p);
    proposal.B = std::move(sol.B);

    double incr = relative_increment(proposal.phi, next.phi);
    incr = std::max(incr, relative_increment(proposal.mu, next.mu));
    incr = std::max(incr, relative_increment(proposal.u, next.u));
    incr = std::max(incr, relative_increment(proposal.p, next.p));
    incr = std::max(incr, relative_increment(proposal.B, next.B));

    diag.picard_iters = k;
    diag.final_increment = incr;
    if (incr < params.picard_tol) {
      next = std::move(proposal);
      converged = true;
      break;
    }

    const Eigen::VectorXd d = concat(proposal) - concat(next);
    if (k > 1) {
      const Eigen::VectorXd dd = d - d_prev;
      const double denom = dd.squaredNorm();
      if (denom > 0.0) omega = std::clamp(-omega * d_prev.dot(dd) / denom, 0.05, 1.0);
    }
    next.phi += omega * (proposal.phi - next.phi);
    next.mu += omega * (proposal.mu - next.mu);
    next.u += omega * (proposal.u - next.u);
    next.p += omega * (proposal.p - next.p);
    next.B += omega * (proposal.B - next.B);
    d_prev = d;
  }

  if (!converged && params.abort_on_nonconvergence)
    throw std::runtime_error("Picard iteration did not converge: increment " +
                             std::to_string(diag.final_increment) + " after " +
                             std::to_string(diag.picard_iters) + " iterations");

  diag.weak_div = weak_divergence_norm(spaces, next.u);
  return {std::move(next), diag};
}

}  // namespace chmhd
