#pragma once

// Scenario configuration: a key/table text file
//
//   [ambient]
//   n = 3
//   k = 1.0
//   [surface]
//   spec = "perturbed_sphere:r0=1,amp=0.05,mode=2"
//   cells = 128
//   ...
//
// Every key has a default; see README for the full schema.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qlmass/geometry.hpp"

namespace qlm {

struct SurfaceSpec {
  enum class Kind { Sphere, PerturbedSphere, ProfileFile } kind = Kind::Sphere;
  double r0 = 1.0;
  double amp = 0.0;
  int mode = 2;
  std::string path;  // ProfileFile, resolved against the config directory
};

// "sphere:r0=<r>", "perturbed_sphere:r0=<r>,amp=<a>,mode=<m>", "profile:@<file>".
SurfaceSpec parse_surface_spec(const std::string& text, const std::string& base_dir = "");

// Profile file: '#' comments, a header line "n k N", then N radii.
RadialSurface read_profile_file(const std::string& path);
// Plain list of N values ('#' comments allowed).
std::vector<double> read_value_file(const std::string& path);

struct Scenario {
  AmbientSpace ambient{3, 1.0};
  std::string surface_text = "sphere:r0=1";
  SurfaceSpec surface;
  std::size_t cells = 128;

  std::string boundary_mode = "scale";  // scale | profile
  double alpha = 0.9;
  std::string boundary_profile;

  double t_end = 1.0;
  double dt = 1e-3;
  double delta_convex = 0.5;
  bool truncate_at_convexity = false;
  double cfl = 1.5;

  double lapse_dt_factor = 2.0;
  double lapse_tolerance = 1e-3;

  double rho_max = 0.0;  // 0 selects max(10/k, tail criterion)
  std::size_t levels = 4000;
  double tail_tol = 1e-4;

  double causal_eps = 1e-8;
  double mass_causal_eps = 1e-9;
  double monotone_tol = 0.0;  // 0 selects the discretisation allowance
  double junction_tol = 1e-10;
  double limit_tol = 1e-6;

  unsigned long long zeta_seed = 20240917ULL;
  int zeta_count = 8;

  std::string output_dir = "out";
  std::string collar_csv;  // empty: <output_dir>/collar.csv
  std::size_t output_stride = 1;

  std::string base_dir;  // directory of the config file

  // Apply "section.key" = value; throws Errc::config for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  // Check invariants (files exist, alpha in (0,1], tolerances > 0).
  void validate() const;
  RadialSurface make_surface() const;
  // Boundary mean curvature H per cell of the initial surface geometry.
  std::vector<double> boundary_mean_curvature(const SurfaceGeometry& g0) const;
  double effective_rho_max() const { return rho_max > 0.0 ? rho_max : 10.0 / ambient.k; }

  // Sorted key = value listing of every effective setting; hashed into config_hash().
  std::string canonical() const;
  std::string config_hash() const;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text, const std::string& base_dir = "");

}  // namespace qlm
