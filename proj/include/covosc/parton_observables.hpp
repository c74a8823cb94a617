#pragma once

// Decoherence observables of a boosted hadron: the squeeze ellipse, the ratio
// of the external-signal interaction time to the internal oscillation period,
// and the entropy carried by the unobserved time-separation variable.

#include <vector>

#include "covosc/covariant_squeeze.hpp"
#include "covosc/rapidity.hpp"

namespace covosc {

/// Proton rest mass in GeV (PDG value).
inline constexpr double kProtonMassGeV = 0.938272;

struct BeamSpec {
  double energy_gev = 0.0;
  double mass_gev = kProtonMassGeV;
};

struct SqueezeEllipse {
  BoostRapidity eta;
  /// Semi-axis along the u light-cone axis, e^eta.
  double major = 1.0;
  /// Semi-axis along the v light-cone axis, e^-eta.
  double minor = 1.0;

  double area() const;
};

SqueezeEllipse axis_scales(BoostRapidity eta);

/// e^{-2 eta}: interaction time with an external signal (contracted by
/// e^-eta) over the internal period (dilated by e^eta).
double interaction_time_ratio(BoostRapidity eta);

/// eta = arccosh(E/m). Throws DomainError when E < m or m <= 0.
BoostRapidity rapidity_from_energy(const BeamSpec& beam);

/// Entropy of the reduced state after bridging the boost rapidity to the
/// coupled-oscillator convention.
double boost_entropy(BoostRapidity eta, RapidityBridge bridge = RapidityBridge::Factor2);

/// n points on e^{-2 eta} u^2 + e^{2 eta} v^2 = 1, i.e.
/// (u, v) = (e^eta cos theta, e^-eta sin theta) with theta = 2 pi i / n,
/// returned in (z, t). Throws DomainError for n < 8.
std::vector<SpacetimePoint> ellipse_samples(BoostRapidity eta, int n);

/// The matching contour of the momentum-energy wave function, returned with
/// z = q_z and t = q_0.
std::vector<SpacetimePoint> momentum_ellipse_samples(BoostRapidity eta, int n);

}  // namespace covosc
