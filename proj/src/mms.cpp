#include "chmhd/mms.hpp"

#include <cmath>
#include <stdexcept>

namespace chmhd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ManufacturedSolution::ManufacturedSolution(double eps, double lambda, double s_c,
                                           CoefficientLaw kappa, CoefficientLaw nu,
                                           CoefficientLaw eta)
    : eps_(eps), lambda_(lambda), s_c_(s_c), kappa_(kappa), nu_(nu), eta_(eta) {
  const bool all_exp = kappa.kind == CoefficientLaw::Kind::ExpPos &&
                       nu.kind == CoefficientLaw::Kind::ExpNeg &&
                       eta.kind == CoefficientLaw::Kind::ExpPos;
  const bool all_const = kappa.kind == CoefficientLaw::Kind::Constant &&
                         nu.kind == CoefficientLaw::Kind::Constant &&
                         eta.kind == CoefficientLaw::Kind::Constant;
  if (!all_exp && !all_const)
    throw std::invalid_argument(
        "manufactured sources exist only for the exp-law triple or all-constant laws");
  exp_laws_ = all_exp;
}

double ManufacturedSolution::phi(double x, double y, double t) const {
  return 2.0 + std::sin(t) * std::cos(kPi * x) * std::cos(kPi * y);
}

Eigen::Vector2d ManufacturedSolution::grad_phi(double x, double y, double t) const {
  const double s = std::sin(t);
  return {-kPi * s * std::sin(kPi * x) * std::cos(kPi * y),
          -kPi * s * std::cos(kPi * x) * std::sin(kPi * y)};
}

double ManufacturedSolution::mu(double x, double y, double t) const {
  return mms_detail::chemical_potential(x, y, t, eps_).mu;
}

Eigen::Vector2d ManufacturedSolution::grad_mu(double x, double y, double t) const {
  return mms_detail::chemical_potential(x, y, t, eps_).grad;
}

Eigen::Vector2d ManufacturedSolution::u(double x, double y, double t) const {
  const double s = std::sin(t);
  const double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
  return {kPi * std::sin(2.0 * kPi * y) * sx * sx * s,
          -kPi * std::sin(2.0 * kPi * x) * sy * sy * s};
}

Eigen::Matrix2d ManufacturedSolution::grad_u(double x, double y, double t) const {
  const double s = std::sin(t);
  const double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
  const double s2x = std::sin(2.0 * kPi * x), s2y = std::sin(2.0 * kPi * y);
  const double c2x = std::cos(2.0 * kPi * x), c2y = std::cos(2.0 * kPi * y);
  Eigen::Matrix2d g;
  g(0, 0) = kPi * kPi * s2y * s2x * s;
  g(0, 1) = 2.0 * kPi * kPi * c2y * sx * sx * s;
  g(1, 0) = -2.0 * kPi * kPi * c2x * sy * sy * s;
  g(1, 1) = -kPi * kPi * s2x * s2y * s;
  return g;
}

double ManufacturedSolution::p(double x, double y, double t) const {
  return std::cos(kPi * x) * std::sin(kPi * y) * std::sin(t);
}

Eigen::Vector2d ManufacturedSolution::B(double x, double y, double t) const {
  const double s = std::sin(t);
  return {std::sin(kPi * x) * std::cos(kPi * y) * s,
          -std::sin(kPi * y) * std::cos(kPi * x) * s};
}

Eigen::Matrix2d ManufacturedSolution::grad_B(double x, double y, double t) const {
  const double s = std::sin(t);
  const double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
  const double cx = std::cos(kPi * x), cy = std::cos(kPi * y);
  Eigen::Matrix2d g;
  g(0, 0) = kPi * cx * cy * s;
  g(0, 1) = -kPi * sx * sy * s;
  g(1, 0) = kPi * sx * sy * s;
  g(1, 1) = -kPi * cy * cx * s;
  return g;
}

mms_detail::SourceValues ManufacturedSolution::sources(double x, double y, double t) const {
  if (exp_laws_) return mms_detail::sources_exp_laws(x, y, t, eps_, lambda_, s_c_);
  return mms_detail::sources_const_laws(x, y, t, eps_, lambda_, s_c_, kappa_.constant,
                                        nu_.constant, eta_.constant);
}

double ManufacturedSolution::g_phi(double x, double y, double t) const {
  return sources(x, y, t).g_phi;
}

Eigen::Vector2d ManufacturedSolution::g_u(double x, double y, double t) const {
  return sources(x, y, t).g_u;
}

Eigen::Vector2d ManufacturedSolution::g_B(double x, double y, double t) const {
  return sources(x, y, t).g_B;
}

}  // namespace chmhd
