#pragma once

#include <Eigen/Core>

#include "chmhd/forms.hpp"

namespace chmhd {

namespace mms_detail {

struct SourceValues {
  double g_phi;
  Eigen::Vector2d g_u;
  Eigen::Vector2d g_B;
};

struct MuValues {
  double mu;
  Eigen::Vector2d grad;
};

SourceValues sources_exp_laws(double x, double y, double t, double eps, double lam, double sc);
SourceValues sources_const_laws(double x, double y, double t, double eps, double lam, double sc,
                                double kappa0, double nu0, double eta0);
MuValues chemical_potential(double x, double y, double t, double eps);

}  // namespace mms_detail

// Closed-form test fields on the unit square:
//   phi = 2 + sin(t) cos(pi x) cos(pi y)
//   u   = (pi sin(2 pi y) sin^2(pi x), -pi sin(2 pi x) sin^2(pi y)) sin(t)
//   p   = cos(pi x) sin(pi y) sin(t)
//   B   = (sin(pi x) cos(pi y), -sin(pi y) cos(pi x)) sin(t)
// mu is derived from phi; the sources make these solve the forced system.
class ManufacturedSolution {
 public:
  ManufacturedSolution(double eps, double lambda, double s_c, CoefficientLaw kappa,
                       CoefficientLaw nu, CoefficientLaw eta);

  double phi(double x, double y, double t) const;
  Eigen::Vector2d grad_phi(double x, double y, double t) const;
  double mu(double x, double y, double t) const;
  Eigen::Vector2d grad_mu(double x, double y, double t) const;
  Eigen::Vector2d u(double x, double y, double t) const;
  Eigen::Matrix2d grad_u(double x, double y, double t) const;  // (i,j) = d u_i / d x_j
  double p(double x, double y, double t) const;
  Eigen::Vector2d B(double x, double y, double t) const;
  Eigen::Matrix2d grad_B(double x, double y, double t) const;

  double g_phi(double x, double y, double t) const;
  Eigen::Vector2d g_u(double x, double y, double t) const;
  Eigen::Vector2d g_B(double x, double y, double t) const;

  double eps() const { return eps_; }
  double lambda() const { return lambda_; }
  double s_c() const { return s_c_; }

 private:
  mms_detail::SourceValues sources(double x, double y, double t) const;

  double eps_, lambda_, s_c_;
  CoefficientLaw kappa_, nu_, eta_;
  bool exp_laws_;
};

}  // namespace chmhd
