#include "covosc/parton_observables.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "covosc/errors.hpp"
#include "covosc/reduced_state.hpp"

namespace covosc {

double SqueezeEllipse::area() const { return std::numbers::pi * major * minor; }

SqueezeEllipse axis_scales(BoostRapidity eta) {
  return SqueezeEllipse{eta, std::exp(eta.value), std::exp(-eta.value)};
}

double interaction_time_ratio(BoostRapidity eta) { return std::exp(-2.0 * eta.value); }

BoostRapidity rapidity_from_energy(const BeamSpec& beam) {
  if (!(beam.mass_gev > 0.0)) throw DomainError("rapidity_from_energy: mass must be positive");
  if (!(beam.energy_gev >= beam.mass_gev)) {
    std::ostringstream msg;
    msg << "rapidity_from_energy: energy " << beam.energy_gev << " GeV is below the mass "
        << beam.mass_gev << " GeV";
    throw DomainError(msg.str());
  }
  return BoostRapidity(std::acosh(beam.energy_gev / beam.mass_gev));
}

double boost_entropy(BoostRapidity eta, RapidityBridge bridge) {
  return entropy(to_coupling(eta, bridge));
}

namespace {

template <class Map>
std::vector<SpacetimePoint> contour(BoostRapidity eta, int n, Map&& to_plane) {
  if (n < 8) throw DomainError("ellipse_samples: need n >= 8, got " + std::to_string(n));
  const double major = std::exp(eta.value);
  const double minor = std::exp(-eta.value);
  std::vector<SpacetimePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back(to_plane(major * std::cos(theta), minor * std::sin(theta)));
  }
  return pts;
}

}  // namespace

std::vector<SpacetimePoint> ellipse_samples(BoostRapidity eta, int n) {
  return contour(eta, n, [](double u, double v) { return from_light_cone({u, v}); });
}

std::vector<SpacetimePoint> momentum_ellipse_samples(BoostRapidity eta, int n) {
  return contour(eta, n, [](double q_u, double q_v) { return momentum_from_light_cone(q_u, q_v); });
}

}  // namespace covosc
