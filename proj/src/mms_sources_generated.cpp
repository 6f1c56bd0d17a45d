// Generated by scripts/generate_mms_sources.py -- do not edit by hand.

#include "chmhd/mms.hpp"

#include <cmath>

namespace chmhd::mms_detail {

using std::cos;
using std::exp;
using std::pow;
using std::sin;

SourceValues sources_exp_laws(double x, double y, double t, double eps, double lam, double sc);
SourceValues sources_const_laws(double x, double y, double t, double eps, double lam, double sc,
                                double kappa0, double nu0, double eta0);

SourceValues sources_exp_laws(double x, double y, double t, double eps, double lam, double sc) {
  const double x0 = M_PI*x;
  const double x1 = std::cos(x0);
  const double x2 = std::cos(t);
  const double x3 = M_PI*y;
  const double x4 = std::cos(x3);
  const double x5 = x2*x4;
  const double x6 = std::sin(x3);
  const double x7 = (x6)*(x6)*(x6);
  const double x8 = (M_PI)*(M_PI);
  const double x9 = std::sin(t);
  const double x10 = (x9)*(x9);
  const double x11 = x10*x8;
  const double x12 = x1*x11;
  const double x13 = std::sin(x0);
  const double x14 = (x13)*(x13);
  const double x15 = (eps)*(eps)*x8;
  const double x16 = x1*x9;
  const double x17 = x16*x4;
  const double x18 = x17 + 2;
  const double x19 = 3*(x18)*(x18);
  const double x20 = std::exp(x18);
  const double x21 = x11*x20;
  const double x22 = x21*(2*x15 + x19 - 1);
  const double x23 = (x6)*(x6);
  const double x24 = 2*x1;
  const double x25 = x14*x4;
  const double x26 = x25*x9;
  const double x27 = 6*x18;
  const double x28 = x4*x9;
  const double x29 = x20*x8;
  const double x30 = 2*x4;
  const double x31 = x15*x30;
  const double x32 = x16*x23;
  const double x33 = -x17;
  const double x34 = lam*x20*(x16*x31 + (x18)*(x18)*(x18) + x33 - 2);
  const double x35 = 4*x14;
  const double x36 = 2*eps*x8*x9;
  const double x37 = x13*x2;
  const double x38 = sc*x10*x6;
  const double x39 = eps*x20;
  const double x40 = M_PI*std::exp(-x18)/eps;
  const double x41 = x23*x24;
  const double x42 = x14*x30;
  const double x43 = x29*x9;
  return {-(x1)*(x1)*x22*x23 + x1*x5 - x11*(x13)*(x13)*(x13)*x4*std::sin(2*x3) + x12*x7*std::sin(2*x0) - x14*x22*(x4)*(x4) + x16*x29*(x19*x4 - x27*x32 + x31 - x4) + x28*x29*(x1*x19 - x1 + x15*x24 - x26*x27),
          {x40*(x13*x28*x34 - x13*x39*x6*(-x12*x35*x6 + x24*x38 - x30*x37 + x9) + x36*x6*(-5*x14*x16 + 8*x25 - x30 + x32*x35 + x32)), -x40*(x13*x36*(8*x1*x23 + 4*x23*x26 - 5*x23*x28 - x24 + x26) - x16*x34*x6 + x39*(-4*x11*x25*x7 + x33 + x37*x41 + x38*x42))},
          {x13*(-x21*x41 + x30*x43 + x5), -x6*(x1*x2 - x21*x42 + x24*x43)}};
}

SourceValues sources_const_laws(double x, double y, double t, double eps, double lam, double sc, double kappa0, double nu0, double eta0) {
  const double x0 = std::cos(t);
  const double x1 = M_PI*x;
  const double x2 = std::cos(x1);
  const double x3 = M_PI*y;
  const double x4 = std::cos(x3);
  const double x5 = x2*x4;
  const double x6 = (M_PI)*(M_PI);
  const double x7 = x2*x6;
  const double x8 = std::sin(t);
  const double x9 = (x8)*(x8);
  const double x10 = std::sin(x3);
  const double x11 = (x10)*(x10)*(x10)*x9;
  const double x12 = x4*x6;
  const double x13 = std::sin(x1);
  const double x14 = (x13)*(x13)*(x13)*x9;
  const double x15 = 2*x6;
  const double x16 = (eps)*(eps)*x15;
  const double x17 = x5*x8;
  const double x18 = x17 + 2;
  const double x19 = 3*(x18)*(x18);
  const double x20 = (x13)*(x13)*x4;
  const double x21 = x20*x8;
  const double x22 = 6*x18;
  const double x23 = kappa0*x8;
  const double x24 = (x10)*(x10)*x2;
  const double x25 = x13*x8;
  const double x26 = -x17;
  const double x27 = lam*(x16*x17 + (x18)*(x18)*(x18) + x26 - 2);
  const double x28 = 4*nu0;
  const double x29 = 2*x0;
  const double x30 = 16*nu0*x6;
  const double x31 = x10*x2;
  const double x32 = 2*sc*x9;
  const double x33 = 4*x6;
  const double x34 = M_PI/eps;
  const double x35 = eta0*x15*x8 + x0;
  return {x0*x5 + x11*x7*std::sin(2*x1) - x12*x14*std::sin(2*x3) + x12*x23*(x16*x2 + x19*x2 - x2 - x21*x22) + x23*x7*(x16*x4 + x19*x4 - x22*x24*x8 - x4),
          {x34*(eps*x10*(-x12*x28*x8 - x13*x31*x32 + x14*x31*x33 + x20*x29 + x21*x30 - x25) + x25*x27*x4), -x34*(eps*(x10*x20*x32 - x11*x20*x33 + x13*x24*x29 + x24*x25*x30 - x25*x28*x7 + x26) - x27*x31*x8)},
          {x13*x35*x4, -x31*x35}};
}

MuValues chemical_potential(double x, double y, double t, double eps) {
  const double x0 = 1.0/eps;
  const double x1 = M_PI*x;
  const double x2 = std::cos(x1);
  const double x3 = M_PI*y;
  const double x4 = std::sin(t);
  const double x5 = x4*std::cos(x3);
  const double x6 = x2*x5;
  const double x7 = x6 + 2;
  const double x8 = 2*(M_PI)*(M_PI)*(eps)*(eps);
  const double x9 = M_PI*x0*(3*(x7)*(x7) + x8 - 1);
  return {x0*(x6*x8 - x6 + (x7)*(x7)*(x7) - 2), {-x5*x9*std::sin(x1), -x2*x4*x9*std::sin(x3)}};
}

}  // namespace chmhd::mms_detail
