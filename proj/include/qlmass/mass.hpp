#pragma once

// Mass functionals along the construction:
//
//   m(t, zeta)    = int_{Sigma x {t}} (H_eta - H_u) W . zeta dsigma_t
//   m~(rho, zeta) = int_{Sigma~_rho} (H~_rho - H~_v) W~ . zeta dsigma~_rho
//
// and the quasi-local mass vector int_Sigma (H_0 - H) W^0 dsigma.

#include <string>
#include <vector>

#include "qlmass/transport.hpp"

namespace qlm {

enum class Integrand { Standard, Swapped };

// Per slice: sum_j (H_bg - H_metric) <W_j>_angle dsigma_j as a Lorentz vector;
// pairing with zeta gives the series value.
std::vector<LorentzVector> interior_moments(const CollarFoliation& c,
                                            const std::vector<std::vector<double>>& Hu,
                                            const TransportField& W,
                                            Integrand integrand = Integrand::Standard);
std::vector<LorentzVector> exterior_moments(const ExteriorFoliation& fol, const TransportField& W,
                                            Integrand integrand = Integrand::Standard);

struct MassSeries {
  LorentzVector zeta;
  std::vector<double> values;
  double slack = 0.0;  // max upward jump between consecutive values
};

MassSeries mass_series(const std::vector<LorentzVector>& moments, const LorentzVector& zeta);

struct MonotonicityVerdict {
  bool pass = true;
  double worst_excess = 0.0;  // max of (m_{i+1} - m_i) / (1 + |m_i|)
  std::size_t worst_index = 0;
};

// Passes iff every forward difference is <= tol (1 + |m_i|).
MonotonicityVerdict verify_monotonicity(const MassSeries& s, double tol);

struct MassTolerances {
  double monotone = 1e-6;
  double junction = 1e-10;
  double causal_eps = 1e-9;
  double limit = 1e-6;  // exterior end value considered non-negative above -limit
  double tail = 1e-4;   // relative change of m~ over the last quarter counted as settled
};

// Allowance for monotonicity checks: 1e-8 + C (step + (pi/N)^2), the spatial
// term dropped for exact spheres.
double monotone_tolerance(double step, std::size_t cells, SurfaceKind kind);
inline constexpr double kMonotoneDiscretizationConstant = 1e-4;

struct ZetaRecord {
  LorentzVector zeta;
  bool interior_monotone = true;
  bool exterior_monotone = true;
  double interior_worst = 0.0;
  double exterior_worst = 0.0;
  double m0 = 0.0, mT = 0.0, m_ext0 = 0.0, m_ext_end = 0.0;
  double junction_error = 0.0;
  bool junction_ok = true;
  bool chain_ok = true;        // m(0) >= m(T) = m~(0) >= m~(end), within tolerance
  bool limit_nonnegative = true;
  // Last quarter of m~: least-squares slope in rho and net change.
  double tail_slope = 0.0;
  double tail_change = 0.0;
  bool tail_settled = true;  // slope < 0 or |change| < tail tolerance
  // int (H~_rho - H~_v) X . zeta at rho_max, expected <= 0 in the limit.
  double x_limit = 0.0;
  bool x_limit_ok = true;
};

struct MassReport {
  LorentzVector mass_vector;
  CausalClass causal_class;
  std::vector<ZetaRecord> zetas;
  bool all_monotone = true;
  bool all_junctions = true;
  bool conclusion_holds = true;  // future-directed non-spacelike or zero
  bool tails_settled = true;
  MassTolerances tolerances;
  double interior_monotone_tol = 0.0;
  double exterior_monotone_tol = 0.0;
};

struct MassInputs {
  const CollarFoliation* collar = nullptr;
  const LapseField* lapse = nullptr;
  const std::vector<double>* H_boundary = nullptr;
  const TransportField* interior = nullptr;
  const ExteriorFoliation* exterior = nullptr;
  const TransportField* exterior_W = nullptr;
  std::vector<LorentzVector> zetas;
  MassTolerances tolerances;
};

MassReport final_mass(const MassInputs& in);

}  // namespace qlm
