#pragma once

// Rapidity values come in two conventions that must not be mixed:
//
//   Coupling: the exponent of the coupled-oscillator ground state,
//             exp{-(e^eta y1^2 + e^-eta y2^2)/2}.
//   Boost:    the Lorentz-boost parameter, under which the space-time
//             oscillator becomes exp{-(e^-2eta u^2 + e^2eta v^2)/2}.
//
// Matching the two Gaussians point by point gives eta_coupling = 2 eta_boost.
// The Identity bridge keeps the numerical value unchanged and exists only so
// the "same form" reading can be computed side by side.

#include <cmath>

namespace covosc {

enum class RapidityConvention { Coupling, Boost };

template <RapidityConvention C>
struct Rapidity {
  static constexpr RapidityConvention convention = C;

  double value = 0.0;

  constexpr Rapidity() = default;
  constexpr explicit Rapidity(double v) : value(v) {}

  constexpr Rapidity operator-() const { return Rapidity(-value); }
  friend constexpr bool operator==(Rapidity, Rapidity) = default;
};

using CouplingRapidity = Rapidity<RapidityConvention::Coupling>;
using BoostRapidity = Rapidity<RapidityConvention::Boost>;

enum class RapidityBridge { Factor2, Identity };

constexpr double bridge_factor(RapidityBridge bridge) {
  return bridge == RapidityBridge::Factor2 ? 2.0 : 1.0;
}

constexpr CouplingRapidity to_coupling(BoostRapidity eta,
                                       RapidityBridge bridge = RapidityBridge::Factor2) {
  return CouplingRapidity(bridge_factor(bridge) * eta.value);
}

constexpr BoostRapidity to_boost(CouplingRapidity eta,
                                 RapidityBridge bridge = RapidityBridge::Factor2) {
  return BoostRapidity(eta.value / bridge_factor(bridge));
}

}  // namespace covosc
