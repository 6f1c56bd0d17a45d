#include "chmhd/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace chmhd {

namespace {

// gradient of a vector P2 field at a quadrature point; row i is grad of
// component i
Eigen::Matrix2d eval_vec_p2_grad(const FormContext& ctx, const Eigen::VectorXd& coeffs,
                                 const DofMap& map, int tri, int q) {
  const auto& grads = ctx.p2_grad(tri, q);
  const auto& dofs = map.cell_dofs[tri];
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  for (int k = 0; k < 6; ++k) {
    g.row(0) += coeffs[dofs[k]] * grads.row(k);
    g.row(1) += coeffs[dofs[k + 6]] * grads.row(k);
  }
  return g;
}

double eval_p1(const FormContext& ctx, const Eigen::VectorXd& coeffs, const DofMap& map, int tri,
               int q) {
  const auto& vals = ctx.p1_ref(q).values;
  const auto& dofs = map.cell_dofs[tri];
  double v = 0.0;
  for (int k = 0; k < 3; ++k) v += coeffs[dofs[k]] * vals[k];
  return v;
}

}  // namespace

double energy(const Spaces& spaces, const FieldState& state, const SchemeParams& params) {
  const FormContext& ctx = spaces.ctx_err;
  double e = 0.0;
  for (int tri = 0; tri < static_cast<int>(spaces.mesh.triangles.size()); ++tri) {
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const double wj = ctx.weight_jac(tri, q);
      const Eigen::Vector2d u = ctx.eval_vec_p2(state.u, spaces.v2, tri, q);
      const Eigen::Vector2d B = ctx.eval_vec_p2(state.B, spaces.v2, tri, q);
      const double phi = ctx.eval_p2(state.phi, spaces.q2, tri, q);
      const Eigen::Vector2d gphi = ctx.eval_p2_grad(state.phi, spaces.q2, tri, q);
      const double well = 1.0 - phi * phi;
      e += wj * (0.5 * u.squaredNorm() + 0.5 * params.s_c * B.squaredNorm() +
                 0.5 * params.lambda * params.eps * gphi.squaredNorm() +
                 0.25 * params.lambda / params.eps * well * well);
    }
  }
  return e;
}

ErrorReport error_norms(const Spaces& spaces, const FieldState& state,
                        const ManufacturedSolution& exact, double t) {
  const FormContext& ctx = spaces.ctx_err;
  ErrorReport rep;
  rep.h = spaces.mesh.h;
  rep.time = t;

  double phi_l2 = 0, phi_h1 = 0, mu_l2 = 0, mu_h1 = 0;
  double u_l2 = 0, u_h1 = 0, B_l2 = 0, B_h1 = 0, p_l2 = 0;
  for (int tri = 0; tri < static_cast<int>(spaces.mesh.triangles.size()); ++tri) {
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const double wj = ctx.weight_jac(tri, q);
      const Eigen::Vector2d xy = ctx.physical_point(tri, q);
      const double x = xy[0], y = xy[1];

      const double e_phi = ctx.eval_p2(state.phi, spaces.q2, tri, q) - exact.phi(x, y, t);
      const Eigen::Vector2d e_gphi =
          ctx.eval_p2_grad(state.phi, spaces.q2, tri, q) - exact.grad_phi(x, y, t);
      const double e_mu = ctx.eval_p2(state.mu, spaces.q2, tri, q) - exact.mu(x, y, t);
      const Eigen::Vector2d e_gmu =
          ctx.eval_p2_grad(state.mu, spaces.q2, tri, q) - exact.grad_mu(x, y, t);
      const Eigen::Vector2d e_u = ctx.eval_vec_p2(state.u, spaces.v2, tri, q) - exact.u(x, y, t);
      const Eigen::Matrix2d e_gu =
          eval_vec_p2_grad(ctx, state.u, spaces.v2, tri, q) - exact.grad_u(x, y, t);
      const Eigen::Vector2d e_B = ctx.eval_vec_p2(state.B, spaces.v2, tri, q) - exact.B(x, y, t);
      const Eigen::Matrix2d e_gB =
          eval_vec_p2_grad(ctx, state.B, spaces.v2, tri, q) - exact.grad_B(x, y, t);
      const double e_p = eval_p1(ctx, state.p, spaces.p1, tri, q) - exact.p(x, y, t);

      phi_l2 += wj * e_phi * e_phi;
      phi_h1 += wj * e_gphi.squaredNorm();
      mu_l2 += wj * e_mu * e_mu;
      mu_h1 += wj * e_gmu.squaredNorm();
      u_l2 += wj * e_u.squaredNorm();
      u_h1 += wj * e_gu.squaredNorm();
      B_l2 += wj * e_B.squaredNorm();
      B_h1 += wj * e_gB.squaredNorm();
      p_l2 += wj * e_p * e_p;
    }
  }
  rep.phi = {std::sqrt(phi_l2), std::sqrt(phi_h1)};
  rep.mu = {std::sqrt(mu_l2), std::sqrt(mu_h1)};
  rep.u = {std::sqrt(u_l2), std::sqrt(u_h1)};
  rep.B = {std::sqrt(B_l2), std::sqrt(B_h1)};
  rep.p_l2 = std::sqrt(p_l2);
  return rep;
}

std::vector<RateRow> observed_rates(const std::vector<ErrorReport>& reports) {
  std::vector<RateRow> rows;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const ErrorReport& c = reports[i - 1];
    const ErrorReport& f = reports[i];
    if (std::abs(c.h - 2.0 * f.h) > 1e-9 * c.h)
      throw std::invalid_argument("rate computation requires h to halve between reports");
    auto rate = [](double coarse, double fine) { return std::log2(coarse / fine); };
    rows.push_back({c.h, f.h, rate(c.phi.h1(), f.phi.h1()), rate(c.mu.h1(), f.mu.h1()),
                    rate(c.u.h1(), f.u.h1()), rate(c.B.h1(), f.B.h1()), rate(c.p_l2, f.p_l2)});
  }
  return rows;
}

}  // namespace chmhd
