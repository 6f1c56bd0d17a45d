#pragma once

#include <vector>

#include "chmhd/mms.hpp"
#include "chmhd/scheme.hpp"

namespace chmhd {

// E = int 1/2 |u|^2 + S_c/2 |B|^2 + lambda eps / 2 |grad phi|^2
//       + lambda/(4 eps) (1 - phi^2)^2
double energy(const Spaces& spaces, const FieldState& state, const SchemeParams& params);

struct FieldErrors {
  double l2 = 0.0;
  double h1_semi = 0.0;
  double h1() const { return std::sqrt(l2 * l2 + h1_semi * h1_semi); }
};

struct ErrorReport {
  double h = 0.0;
  double dt = 0.0;
  double time = 0.0;
  FieldErrors phi, mu, u, B;
  double p_l2 = 0.0;
};

ErrorReport error_norms(const Spaces& spaces, const FieldState& state,
                        const ManufacturedSolution& exact, double t);

struct RateRow {
  double h_coarse, h_fine;
  double phi_h1, mu_h1, u_h1, B_h1, p_l2;
};

// log2 error ratios between consecutive reports; requires h to halve.
std::vector<RateRow> observed_rates(const std::vector<ErrorReport>& reports);

}  // namespace chmhd
