#pragma once

// Exterior end: the distance foliation of H^n outside the convex slice F(Sigma,T)
// and the quasi-spherical equation
//
//   2 H~ dv/drho = 2 v^2 Lap v + (v - v^3)(R~ + n(n-1)k^2)
//
// whose solution gives v^2 drho^2 + g~_rho constant scalar curvature -n(n-1)k^2.

#include <cstddef>
#include <vector>

#include "qlmass/geometry.hpp"

namespace qlm {

struct ExteriorFoliation {
  SurfaceGeometry base;  // F(Sigma, T), level 0
  std::vector<double> rho;
  // Level geometry is closed form in terms of the base and is rebuilt on demand.
  SurfaceGeometry level(std::size_t i) const;
  std::vector<std::vector<double>> H_rho;  // H~_rho per (level, cell)
  // v = 1 + w; w is carried separately so that v - 1 keeps full relative
  // precision far out where v - 1 ~ e^{-3k rho}.
  std::vector<std::vector<double>> w;
  std::vector<std::vector<double>> v;
  std::vector<std::vector<double>> H_v;  // H~_rho / v

  std::size_t level_count() const noexcept { return rho.size(); }
  std::size_t cells() const noexcept { return base.cells(); }
  bool solved() const noexcept { return !v.empty(); }
  // Area radius sqrt(Area / |S^{n-1}|)^{1/(n-1)} of a level.
  double area_radius(std::size_t level) const;
};

// Levels rho_i = i rho_max / level_steps, i = 0..level_steps, obtained as exact
// parallel surfaces of `base` (the unit-speed normal flow in g_hyp).
// Throws Errc::geometry if `base` or any level is not strictly convex.
ExteriorFoliation build_distance_foliation(const SurfaceGeometry& base, double rho_max,
                                           std::size_t level_steps);

struct ExteriorControls {
  double stability_limit = 2.0;
  double blow_up_factor = 10.0;
};

// Throws Errc::blow_up if v exceeds blow_up_factor * max v0 or reaches zero.
void solve_exterior_v(ExteriorFoliation& fol, const std::vector<double>& v0,
                      const ExteriorControls& controls = {});

// Least-squares decay rate of log max_j |v - 1| over the last half of the levels
// (+inf when v is identically one there).
double tail_decay_rate(const ExteriorFoliation& fol);

}  // namespace qlm
