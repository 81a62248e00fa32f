#pragma once

// Star-shaped hypersurfaces of H^n_{-k^2} written as radial graphs r(theta)
// about the hyperboloid vertex, and their extrinsic/intrinsic geometry.
//
// Two representations share one data layout:
//  * ExactSphere: a geodesic sphere of radius r, any n >= 3. A single "cell"
//    carries the closed-form geometry; angular dependence of vector fields is
//    carried by spherical-harmonic degree (see ModeLayout).
//  * Profile: n = 3, axisymmetric about the x_3 axis, N cell-centred polar
//    angles theta_j = (j + 1/2) pi / N. No node sits on a pole; even
//    reflection supplies ghost values.

#include <cstddef>
#include <string>
#include <vector>

#include "qlmass/minkowski.hpp"

namespace qlm {

enum class SurfaceKind { ExactSphere, Profile };

inline constexpr std::size_t kMinProfileCells = 16;

struct RadialSurface {
  AmbientSpace amb;
  SurfaceKind kind = SurfaceKind::ExactSphere;
  double sphere_radius = 0.0;   // ExactSphere
  std::vector<double> radii;    // Profile, one per cell

  static RadialSurface sphere(const AmbientSpace& amb, double r);
  static RadialSurface profile(const AmbientSpace& amb, std::vector<double> radii);
  // r_j = r0 (1 + amp P_mode(cos theta_j)).
  static RadialSurface perturbed_sphere(const AmbientSpace& amb, double r0, double amp, int mode,
                                        std::size_t cells);

  std::size_t cells() const noexcept { return kind == SurfaceKind::ExactSphere ? 1 : radii.size(); }
  // Throws Errc::geometry / Errc::invalid_argument when the invariants fail.
  void validate() const;
};

// Cell-centred polar grid on [0, pi].
double cell_center(std::size_t j, std::size_t cells);
double cell_face(std::size_t j, std::size_t cells);  // j in [0, cells]

// How the n+1 Lorentz components of a vector field vary over the angular
// directions. A field is stored as one amplitude per component per cell:
//  * Profile (n = 3): W = (a_x cos(phi), a_y sin(phi), a_z ; a_t), so x and y
//    are azimuthal mode 1 and z, t are mode 0.
//  * ExactSphere: W = (a_1 w_1, ..., a_n w_n ; a_t) with w the unit direction,
//    i.e. spatial components are degree-1 harmonics and t is constant.
struct ModeLayout {
  SurfaceKind kind = SurfaceKind::ExactSphere;
  int n = 3;

  // Eigenvalue weight entering the Laplacian: m^2 (Profile) or l(l+n-2) (ExactSphere).
  double laplace_weight(std::size_t component) const noexcept;
  bool invariant(std::size_t component) const noexcept;
  // Angular average of the field at one cell (non-invariant modes average to zero).
  LorentzVector angular_mean(const LorentzVector& amplitudes) const;
  // The point value with the largest spatial norm over the cell's orbit.
  LorentzVector worst_point(const LorentzVector& amplitudes) const;
};

struct SurfaceGeometry {
  AmbientSpace amb;
  SurfaceKind kind = SurfaceKind::ExactSphere;

  std::vector<double> theta;      // cell centres (Profile); {0} for ExactSphere
  // Induced metric: g_thth = ell_theta^2, g_phph = ell_phi^2 sin^2(theta).
  // For ExactSphere both equal the area radius sinh(kr)/k.
  std::vector<double> ell_theta;
  std::vector<double> ell_phi;
  // Principal curvatures per cell: Profile {kappa_meridian, kappa_azimuthal},
  // ExactSphere n-1 equal values.
  std::vector<std::vector<double>> principal;
  std::vector<double> H;
  std::vector<double> absA2;
  // Intrinsic scalar curvature from the traced Gauss equation.
  std::vector<double> R_intrinsic;
  // Quadrature weight (integrated over the azimuth / the whole sphere).
  std::vector<double> area;
  // Mode amplitudes of the position vector X and the outward unit normal.
  std::vector<LorentzVector> position;
  std::vector<LorentzVector> normal;

  std::size_t cells() const noexcept { return H.size(); }
  ModeLayout layout() const noexcept { return {kind, amb.n}; }
  double total_area() const;
  double min_principal() const;
  double g_thth(std::size_t j) const { return ell_theta[j] * ell_theta[j]; }
  double g_phph(std::size_t j) const;
};

SurfaceGeometry compute_geometry(const RadialSurface& s);

// Parallel surface at hyperbolic distance rho along the outward normal,
// parametrised by foot points. Requires 1 + kappa_i tanh(k rho)/k > 0.
SurfaceGeometry parallel_surface(const SurfaceGeometry& base, double rho);

enum class Gamma2 { Inside, Boundary, Outside };
const char* gamma2_name(Gamma2 g) noexcept;

// sigma_1 = sum kappa_i, sigma_2 = sum_{i<j} kappa_i kappa_j compared against
// eps * max(1, sum kappa_i^2).
Gamma2 gamma2_membership(const std::vector<double>& principal, double eps);

// Per cell: H^2 - |A|^2 > 0, cross-checked in sign against R + (n-1)(n-2)k^2.
std::vector<bool> scalar_condition_check(const SurfaceGeometry& geo);

// Area of the unit sphere S^{n-1}.
double unit_sphere_area(int n);

}  // namespace qlm
