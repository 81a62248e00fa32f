#pragma once

// Expanding inverse curvature flow dF/dt = ((n-2)/(n-1)) H / (H^2 - |A|^2) nu,
// evolved as a radial graph, and the collar foliation it sweeps out.

#include <cstddef>
#include <vector>

#include "qlmass/geometry.hpp"

namespace qlm {

struct IcfControls {
  // Heun is stable for dt * lambda <= 2 on the negative real axis; the
  // monitor halves the step until dt * lambda <= cfl.
  double cfl = 1.5;
  double gamma2_eps = 1e-10;
  int max_halvings = 14;
};

// The pullback of g_hyp to Sigma x [0,T] is eta^2 dt^2 + g_t. Fields indexed
// [slice][cell].
struct CollarFoliation {
  AmbientSpace amb;
  SurfaceKind kind = SurfaceKind::ExactSphere;
  std::vector<double> times;
  std::vector<std::vector<double>> radii;
  std::vector<SurfaceGeometry> slices;
  std::vector<std::vector<double>> eta;
  std::vector<std::vector<double>> H_one;      // eta * H_eta
  std::vector<std::vector<double>> absA_one2;  // eta^2 |A_eta|^2
  // The graph grid points move radially, so they drift along the slice:
  // d/dt along the normal = d/dt at fixed theta - tau d/dtheta, with
  // tau = eta r_theta / (S L). Zero for ExactSphere.
  std::vector<std::vector<double>> tau;
  std::vector<std::vector<double>> dt_H_one;  // normal time derivative of H_one

  std::size_t slice_count() const noexcept { return times.size(); }
  std::size_t cells() const noexcept { return slices.empty() ? 0 : slices.front().cells(); }
  double T() const { return times.back(); }
  // Recompute eta, H_one, |A_one|^2, tau and the normal time derivative of H_one.
  void finalize();
};

// eta = ((n-2)/(n-1)) H / (H^2 - |A|^2) per cell.
std::vector<double> flow_speed(const SurfaceGeometry& geo);

// Stores every step of length t_end / ceil(t_end / dt). Throws Errc::flow when a
// slice leaves Gamma_2, stops expanding, or the step monitor cannot stabilise.
CollarFoliation run_icf(const RadialSurface& s0, double t_end, double dt,
                        const IcfControls& controls = {});

struct FlowDiagnostics {
  std::vector<double> umbilicity;  // max_cell max_i |kappa_i / k - 1| per slice
  double fitted_decay_rate = 0.0;  // +inf when the fitted window is identically zero
  double convexity_time = -1.0;    // -1 when never reached
};

FlowDiagnostics flow_diagnostics(const CollarFoliation& c, double delta_convex = 0.5);

// First slice time with min kappa_i > delta_convex * k. Throws Errc::flow if never.
double select_T(const CollarFoliation& c, double delta_convex);

CollarFoliation truncate_collar(const CollarFoliation& c, double T);

}  // namespace qlm
