#pragma once

// Interior lapse: find u > 0 on the collar so that u^2 dt^2 + g_t has scalar
// curvature -n(n-1)k^2. With H_1 = eta H_eta and |A_1|^2 = eta^2 |A_eta|^2,
//
//   u_t = (u^2/H_1) Lap u + (u/(2H_1)) (H_1^2 + |A_1|^2 + 2 dH_1/dt)
//         - (u^3/(2H_1)) (R^t + n(n-1)k^2),
//
// with u_t the derivative along the normal (see CollarFoliation::tau).

#include <vector>

#include "qlmass/icf.hpp"

namespace qlm {

struct LapseBarriers {
  double C = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool gamma_clamped = false;  // the raw bound was below the 0.1 floor
  double lower(double t) const;
};

struct LapseField {
  std::vector<std::vector<double>> u;  // [slice][cell]
  std::vector<double> u0;
  LapseBarriers barriers;
  int max_substeps = 1;
};

struct LapseControls {
  double stability_limit = 2.0;  // h * (u^2/H_1) |L_jj| per substep
  bool enforce_barriers = true;
};

// Upper barrier C and lower barrier beta e^{-gamma t}, each with a 10% margin.
// Throws Errc::invalid_argument if R^t + n(n-1)k^2 <= 0 anywhere.
LapseBarriers compute_barriers(const CollarFoliation& c, const std::vector<double>& u0);

// u0 = eta(.,0) H_eta(.,0) / H, so that H_u(.,0) = H for boundary mean curvature H.
std::vector<double> initial_lapse(const CollarFoliation& c, const std::vector<double>& H_boundary);

// Throws Errc::barrier at the first grid point outside (beta e^{-gamma t}, C).
LapseField solve_lapse(const CollarFoliation& c, const std::vector<double>& u0,
                       const LapseControls& controls = {});

// H_u = H_1 / u.
std::vector<std::vector<double>> mean_curvature_of_lapse(const CollarFoliation& c,
                                                         const std::vector<std::vector<double>>& u);
// Principal curvatures of the slices in g_u: eta kappa_i / u.
std::vector<std::vector<std::vector<double>>> principal_of_lapse(
    const CollarFoliation& c, const std::vector<std::vector<double>>& u);

// Max |dH_u/dt - (-Lap u + (u/2)(R^t + n(n-1)k^2) - (H_1^2 + |A_1|^2)/(2u))|
// over interior slices, with centred time differences.
double verify_Hu_evolution(const CollarFoliation& c, const std::vector<std::vector<double>>& u);

// Pointwise residual of the same identity; NaN on the first and last slice.
std::vector<std::vector<double>> Hu_evolution_residuals(const CollarFoliation& c,
                                                        const std::vector<std::vector<double>>& u);

}  // namespace qlm
