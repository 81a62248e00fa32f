#pragma once

// Lorentz-vector weights transported backward through the exterior and the
// collar:
//
//   exterior:  (H~/v) dW~/drho = -Lap W~ + (n-1)k^2 W~,   W~ ~ -k X at infinity
//   interior: -(H_1/(u eta)) dW/dt = Lap W - (n-1)k^2 W,   W(.,T) = W~(.,0)
//
// Both are backward parabolic in their foliation parameter, so they are
// integrated from the outer end inwards. Lap acts on each Lorentz component
// as the scalar Laplace-Beltrami operator of the slice.

#include <cstddef>
#include <vector>

#include "qlmass/exterior.hpp"
#include "qlmass/lapse.hpp"

namespace qlm {

struct TransportControls {
  double eps_causal = 1e-8;
  bool enforce_causal = true;
};

struct TransportField {
  ModeLayout layout;
  std::vector<std::vector<LorentzVector>> W;  // [slice or level][cell] mode amplitudes
  // min over the grid of -<W,W>/|W|^2 at the worst azimuth (zero vectors skipped)
  double causal_margin = 0.0;
};

// Terminal data -k X on the outermost level.
std::vector<LorentzVector> exterior_terminal_data(const ExteriorFoliation& fol);

TransportField solve_exterior_W(const ExteriorFoliation& fol, const TransportControls& controls = {});
TransportField solve_exterior_W(const ExteriorFoliation& fol,
                                const std::vector<LorentzVector>& terminal,
                                const TransportControls& controls = {});

TransportField solve_interior_W(const CollarFoliation& c, const LapseField& lapse,
                                const std::vector<LorentzVector>& W_T,
                                const TransportControls& controls = {});

// W^0 = -W(., 0).
std::vector<LorentzVector> future_weight(const TransportField& interior);

// Past-directed non-spacelike within eps (zero vectors included).
bool past_causal(const ModeLayout& layout, const LorentzVector& amplitudes, double eps);

}  // namespace qlm
