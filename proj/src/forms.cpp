#include "chmhd/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace chmhd {

double CoefficientLaw::operator()(double phi) const {
  double v = 0.0;
  switch (kind) {
    case Kind::Constant: v = constant; break;
    case Kind::ExpPos: v = std::exp(phi); break;
    case Kind::ExpNeg: v = std::exp(-phi); break;
  }
  if (!(v > 0.0))
    throw std::runtime_error("coefficient law produced non-positive value " + std::to_string(v) +
                             " at phi = " + std::to_string(phi));
  return v;
}

FormContext::FormContext(const Mesh& mesh, int quadrature_degree)
    : mesh_(&mesh), rule_(gauss_rule(quadrature_degree)) {
  const ReferenceElement p1 = reference_element(1);
  const ReferenceElement p2 = reference_element(2);
  for (int q = 0; q < rule_.size(); ++q) {
    p1_ref_.push_back(eval_basis(p1, rule_.points[q]));
    p2_ref_.push_back(eval_basis(p2, rule_.points[q]));
  }

  const int nt = mesh.n_triangles();
  det_.resize(nt);
  maps_.reserve(nt);
  p1_grad_.resize(nt * rule_.size());
  p2_grad_.resize(nt * rule_.size());
  for (int t = 0; t < nt; ++t) {
    maps_.push_back(affine_map(mesh, t));
    det_[t] = maps_[t].det;
    for (int q = 0; q < rule_.size(); ++q) {
      p1_grad_[t * rule_.size() + q] = physical_gradients(maps_[t], p1_ref_[q].gradients);
      p2_grad_[t * rule_.size() + q] = physical_gradients(maps_[t], p2_ref_[q].gradients);
    }
  }
}

Eigen::Vector2d FormContext::physical_point(int tri, int q) const {
  return maps_[tri].to_physical(rule_.points[q]);
}

double FormContext::eval_p2(const Eigen::VectorXd& coeffs, const DofMap& map, int tri, int q) const {
  const auto& dofs = map.cell_dofs[tri];
  double v = 0.0;
  for (int k = 0; k < 6; ++k) v += coeffs[dofs[k]] * p2_ref_[q].values[k];
  return v;
}

Eigen::Vector2d FormContext::eval_p2_grad(const Eigen::VectorXd& coeffs, const DofMap& map, int tri,
                                          int q) const {
  const auto& dofs = map.cell_dofs[tri];
  const auto& g = p2_grad(tri, q);
  Eigen::Vector2d out = Eigen::Vector2d::Zero();
  for (int k = 0; k < 6; ++k) out += coeffs[dofs[k]] * g.row(k).transpose();
  return out;
}

Eigen::Vector2d FormContext::eval_vec_p2(const Eigen::VectorXd& coeffs, const DofMap& map, int tri,
                                         int q) const {
  const auto& dofs = map.cell_dofs[tri];
  Eigen::Vector2d out = Eigen::Vector2d::Zero();
  for (int k = 0; k < 6; ++k) {
    out.x() += coeffs[dofs[k]] * p2_ref_[q].values[k];
    out.y() += coeffs[dofs[k + 6]] * p2_ref_[q].values[k];
  }
  return out;
}

namespace {

void check_field(const DiscreteField& f) {
  if (!f.dofmap || f.coeffs.size() != f.dofmap->n_dofs)
    throw std::invalid_argument("discrete field coefficient length does not match its dofmap");
}

// Scatter one element matrix into the triplet list.
void scatter(std::vector<Triplet>& trip, const std::vector<int>& row_dofs,
             const std::vector<int>& col_dofs, const Eigen::MatrixXd& local) {
  for (int i = 0; i < local.rows(); ++i)
    for (int j = 0; j < local.cols(); ++j)
      if (local(i, j) != 0.0) trip.emplace_back(row_dofs[i], col_dofs[j], local(i, j));
}

// Vector-P2 local shape k (k < 12): component and scalar shape index.
inline int vcomp(int k) { return k < 6 ? 0 : 1; }
inline int vshape(int k) { return k < 6 ? k : k - 6; }

}  // namespace

SparseMatrix assemble_mass(const FormContext& ctx, const DofMap& map) {
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  const int nl = map.local_size;
  const int ns = nl / map.components();
  Eigen::MatrixXd local(nl, nl);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::VectorXd& N =
          map.degree() == 1 ? ctx.p1_ref(q).values : ctx.p2_ref(q).values;
      const double wj = ctx.weight_jac(t, q);
      for (int c = 0; c < map.components(); ++c)
        local.block(c * ns, c * ns, ns, ns) += wj * N * N.transpose();
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_a_phi(const FormContext& ctx, const DofMap& map, const CoefficientLaw& kappa,
                            const DiscreteField& phi_prev) {
  check_field(phi_prev);
  if (map.kind != FieldKind::ScalarP2) throw std::invalid_argument("a_phi needs scalar P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(6, 6);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const auto& g = ctx.p2_grad(t, q);
      const double k = kappa(ctx.eval_p2(phi_prev.coeffs, *phi_prev.dofmap, t, q));
      local += (ctx.weight_jac(t, q) * k) * (g * g.transpose());
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_a_f(const FormContext& ctx, const DofMap& map, const CoefficientLaw& nu,
                          const DiscreteField& phi_prev) {
  check_field(phi_prev);
  if (map.kind != FieldKind::VectorP2) throw std::invalid_argument("a_f needs vector P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(12, 12);
  std::array<Eigen::Matrix2d, 12> D;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const auto& g = ctx.p2_grad(t, q);
      for (int k = 0; k < 12; ++k) {
        Eigen::Matrix2d grad = Eigen::Matrix2d::Zero();
        grad.row(vcomp(k)) = g.row(vshape(k));
        D[k] = 0.5 * (grad + grad.transpose());
      }
      const double n = nu(ctx.eval_p2(phi_prev.coeffs, *phi_prev.dofmap, t, q));
      const double s = 2.0 * n * ctx.weight_jac(t, q);
      for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
          local(i, j) += s * D[i].cwiseProduct(D[j]).sum();
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_a_B(const FormContext& ctx, const DofMap& map, const CoefficientLaw& eta,
                          const DiscreteField& phi_prev) {
  check_field(phi_prev);
  if (map.kind != FieldKind::VectorP2) throw std::invalid_argument("a_B needs vector P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(12, 12);
  Eigen::VectorXd curl(12), div(12);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const auto& g = ctx.p2_grad(t, q);
      for (int k = 0; k < 12; ++k) {
        // 2D scalar curl of (Bx, By) is d1 By - d2 Bx
        curl[k] = vcomp(k) == 1 ? g(vshape(k), 0) : -g(vshape(k), 1);
        div[k] = g(vshape(k), vcomp(k));
      }
      const double e = eta(ctx.eval_p2(phi_prev.coeffs, *phi_prev.dofmap, t, q));
      local += (e * ctx.weight_jac(t, q)) * (curl * curl.transpose() + div * div.transpose());
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_d(const FormContext& ctx, const DofMap& velocity_map, const DofMap& pressure_map) {
  if (velocity_map.kind != FieldKind::VectorP2 || pressure_map.kind != FieldKind::ScalarP1)
    throw std::invalid_argument("assemble_d needs (vector P2, scalar P1)");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(3, 12);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const auto& g = ctx.p2_grad(t, q);
      const Eigen::VectorXd& Nq = ctx.p1_ref(q).values;
      const double wj = ctx.weight_jac(t, q);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 12; ++j)
          local(i, j) += wj * Nq[i] * g(vshape(j), vcomp(j));
    }
    scatter(trip, pressure_map.cell_dofs[t], velocity_map.cell_dofs[t], local);
  }
  return from_triplets(pressure_map.n_dofs, velocity_map.n_dofs, trip);
}

SparseMatrix assemble_b(const FormContext& ctx, const DofMap& map, const DiscreteField& advecting) {
  check_field(advecting);
  if (map.kind != FieldKind::VectorP2) throw std::invalid_argument("assemble_b needs vector P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(12, 12);
  Eigen::VectorXd wgrad(6);  // (w . grad) N_s per scalar shape
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::Vector2d w = ctx.eval_vec_p2(advecting.coeffs, *advecting.dofmap, t, q);
      const auto& g = ctx.p2_grad(t, q);
      const Eigen::VectorXd& N = ctx.p2_ref(q).values;
      for (int s = 0; s < 6; ++s) wgrad[s] = w.dot(g.row(s).transpose());
      const double half_wj = 0.5 * ctx.weight_jac(t, q);
      // [(w.grad) x_j] . x_i is nonzero only for matching components
      for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
          if (vcomp(i) != vcomp(j)) continue;
          local(i, j) += half_wj * (wgrad[vshape(j)] * N[vshape(i)] - wgrad[vshape(i)] * N[vshape(j)]);
        }
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_c_hat(const FormContext& ctx, const DofMap& map, const DiscreteField& magnetic_lag) {
  check_field(magnetic_lag);
  if (map.kind != FieldKind::VectorP2) throw std::invalid_argument("c_hat needs vector P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(12, 12);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::Vector2d H = ctx.eval_vec_p2(magnetic_lag.coeffs, *magnetic_lag.dofmap, t, q);
      const auto& g = ctx.p2_grad(t, q);
      const Eigen::VectorXd& N = ctx.p2_ref(q).values;
      const double wj = ctx.weight_jac(t, q);
      // H x (scalar curl B) = (H2 curlB, -H1 curlB)
      for (int j = 0; j < 12; ++j) {
        const double curl_j = vcomp(j) == 1 ? g(vshape(j), 0) : -g(vshape(j), 1);
        for (int i = 0; i < 12; ++i) {
          const double vdot = vcomp(i) == 0 ? H.y() * N[vshape(i)] : -H.x() * N[vshape(i)];
          local(i, j) += wj * curl_j * vdot;
        }
      }
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_c_tilde(const FormContext& ctx, const DofMap& map, const DiscreteField& magnetic_lag) {
  check_field(magnetic_lag);
  if (map.kind != FieldKind::VectorP2) throw std::invalid_argument("c_tilde needs vector P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(12, 12);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::Vector2d B = ctx.eval_vec_p2(magnetic_lag.coeffs, *magnetic_lag.dofmap, t, q);
      const auto& g = ctx.p2_grad(t, q);
      const Eigen::VectorXd& N = ctx.p2_ref(q).values;
      const double wj = ctx.weight_jac(t, q);
      // (u x B) is the scalar u1 B2 - u2 B1; pairs with scalar curl of the test H
      for (int j = 0; j < 12; ++j) {
        const double cross_j =
            vcomp(j) == 0 ? N[vshape(j)] * B.y() : -N[vshape(j)] * B.x();
        for (int i = 0; i < 12; ++i) {
          const double curl_i = vcomp(i) == 1 ? g(vshape(i), 0) : -g(vshape(i), 1);
          local(i, j) += wj * cross_j * curl_i;
        }
      }
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

SparseMatrix assemble_capillary(const FormContext& ctx, const DofMap& velocity_map,
                                const DofMap& scalar_map, const DiscreteField& phi_prev) {
  check_field(phi_prev);
  if (velocity_map.kind != FieldKind::VectorP2 || scalar_map.kind != FieldKind::ScalarP2)
    throw std::invalid_argument("capillary needs (vector P2, scalar P2)");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(6, 12);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::Vector2d gphi = ctx.eval_p2_grad(phi_prev.coeffs, *phi_prev.dofmap, t, q);
      const Eigen::VectorXd& N = ctx.p2_ref(q).values;
      const double wj = ctx.weight_jac(t, q);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 12; ++j)
          local(i, j) += wj * N[i] * gphi[vcomp(j)] * N[vshape(j)];
    }
    scatter(trip, scalar_map.cell_dofs[t], velocity_map.cell_dofs[t], local);
  }
  return from_triplets(scalar_map.n_dofs, velocity_map.n_dofs, trip);
}

SparseMatrix assemble_cubic(const FormContext& ctx, const DofMap& map, const DiscreteField& phi_iter) {
  check_field(phi_iter);
  if (map.kind != FieldKind::ScalarP2) throw std::invalid_argument("cubic needs scalar P2");
  const Mesh& mesh = ctx.mesh();
  std::vector<Triplet> trip;
  Eigen::MatrixXd local(6, 6);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    local.setZero();
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const double phi = ctx.eval_p2(phi_iter.coeffs, *phi_iter.dofmap, t, q);
      const Eigen::VectorXd& N = ctx.p2_ref(q).values;
      local += (phi * phi * ctx.weight_jac(t, q)) * N * N.transpose();
    }
    scatter(trip, map.cell_dofs[t], map.cell_dofs[t], local);
  }
  return from_triplets(map.n_dofs, map.n_dofs, trip);
}

Eigen::VectorXd assemble_load(const FormContext& ctx, const DofMap& map, const ScalarFunction& f) {
  if (map.components() != 1) throw std::invalid_argument("scalar load on vector space");
  const Mesh& mesh = ctx.mesh();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(map.n_dofs);
  const int nl = map.local_size;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::Vector2d x = ctx.physical_point(t, q);
      const double fv = f(x.x(), x.y()) * ctx.weight_jac(t, q);
      const Eigen::VectorXd& N = map.degree() == 1 ? ctx.p1_ref(q).values : ctx.p2_ref(q).values;
      for (int i = 0; i < nl; ++i) load[map.cell_dofs[t][i]] += fv * N[i];
    }
  }
  return load;
}

Eigen::VectorXd assemble_load(const FormContext& ctx, const DofMap& map, const VectorFunction& f) {
  if (map.kind != FieldKind::VectorP2) throw std::invalid_argument("vector load on scalar space");
  const Mesh& mesh = ctx.mesh();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(map.n_dofs);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    for (int q = 0; q < ctx.n_qp(); ++q) {
      const Eigen::Vector2d x = ctx.physical_point(t, q);
      const Eigen::Vector2d fv = f(x.x(), x.y()) * ctx.weight_jac(t, q);
      const Eigen::VectorXd& N = ctx.p2_ref(q).values;
      for (int i = 0; i < 12; ++i)
        load[map.cell_dofs[t][i]] += fv[vcomp(i)] * N[vshape(i)];
    }
  }
  return load;
}

}  // namespace chmhd
