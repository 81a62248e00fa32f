#pragma once

// Shared machinery for the parabolic solves: tridiagonal systems, the
// finite-volume Laplace-Beltrami operator of an axisymmetric slice, and the
// two time steppers (quasilinear predictor-corrector, linear Crank-Nicolson).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qlmass/geometry.hpp"

namespace qlm {

struct Tridiagonal {
  // Row j: lower[j] u[j-1] + diag[j] u[j] + upper[j] u[j+1]; lower[0] and
  // upper[N-1] are unused and kept zero.
  std::vector<double> lower, diag, upper;

  explicit Tridiagonal(std::size_t n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}
  std::size_t size() const noexcept { return diag.size(); }

  std::vector<double> apply(std::span<const double> u) const;
  // Convex combination (1 - lambda) a + lambda b.
  static Tridiagonal blend(const Tridiagonal& a, const Tridiagonal& b, double lambda);
};

// Thomas algorithm. Throws Errc::step_underflow on a vanishing pivot.
std::vector<double> solve_tridiagonal(const Tridiagonal& m, std::span<const double> rhs);

// Laplace-Beltrami operator of the slice acting on amplitudes with the given
// mode weight (m^2 for an azimuthal mode, l(l+n-2) for a spherical harmonic).
// Rows sum to -weight / g_phph, so constants are annihilated exactly when weight = 0.
Tridiagonal laplacian(const SurfaceGeometry& geo, double mode_weight = 0.0);

// Central d/dtheta on the cell-centred grid. Ghost values across the poles are
// even reflections for axisymmetric scalars and mode-0 amplitudes, odd for
// mode-1 amplitudes. All zero for an ExactSphere slice.
Tridiagonal theta_derivative(const SurfaceGeometry& geo, bool even);

// op += diag(b) d/dtheta. Rows where the central stencil would give a negative
// off-diagonal use the upwind one-sided difference instead.
void add_advection(Tridiagonal& op, const SurfaceGeometry& geo, std::span<const double> b, bool even);

// u_t = a(u) * (L u) + f(u) with pointwise a > 0, stepped in delta form:
// a backward-Euler predictor with frozen coefficient followed by a
// Crank-Nicolson corrector whose coefficient and reaction are evaluated at the
// predicted midpoint. Second order; u = const with L u = 0 and f = 0 is a
// fixed point up to rounding in the row sums.
class QuasilinearStepper {
 public:
  // Operator at fractional position lambda in [0, 1] of the current step.
  using OperatorFn = std::function<Tridiagonal(double lambda)>;
  // Fill a (diffusivity) and f (reaction) for state u at position lambda.
  using CoeffFn = std::function<void(double lambda, std::span<const double> u,
                                     std::span<double> a, std::span<double> f)>;

  QuasilinearStepper(OperatorFn op, CoeffFn coeffs, double stability_limit = 2.0)
      : op_(std::move(op)), coeffs_(std::move(coeffs)), limit_(stability_limit) {}

  // Advance u over one step of length h, subdividing so that
  // h_sub * max_j a_j |L_jj| <= stability_limit. Returns the substep count.
  int advance(std::vector<double>& u, double h, int max_substeps = 1 << 12) const;

 private:
  void substep(std::vector<double>& u, double h, double l0, double l1) const;

  OperatorFn op_;
  CoeffFn coeffs_;
  double limit_;
};

// w_s = c * (L - mu) w, Crank-Nicolson with the operator and coefficient
// interpolated linearly between the two end frames. Sub-steps keep the
// explicit half nonnegative, which makes the update order preserving.
struct LinearFrame {
  Tridiagonal op;              // includes the -mu diagonal
  std::vector<double> coeff;   // c > 0 per cell
};

int crank_nicolson_advance(std::vector<double>& w, const LinearFrame& from, const LinearFrame& to,
                           double h, int max_substeps = 1 << 12);

}  // namespace qlm
