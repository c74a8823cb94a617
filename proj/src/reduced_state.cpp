#include "covosc/reduced_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "covosc/errors.hpp"
#include "covosc/hermite.hpp"
#include "covosc/oscillator_core.hpp"

namespace covosc {

ReducedState::ReducedState(CouplingRapidity eta)
    : ReducedState(eta, default_truncation_order(eta)) {}

ReducedState::ReducedState(CouplingRapidity eta, int k_max) : eta_(eta), k_max_(k_max) {
  if (k_max < 0) throw DomainError("ReducedState: k_max must be >= 0, got " + std::to_string(k_max));
  const double half = 0.5 * std::abs(eta.value);
  const auto n = static_cast<std::size_t>(k_max) + 1;
  weights_.resize(n);
  log_weights_.resize(n);

  if (half == 0.0) {
    std::fill(weights_.begin(), weights_.end(), 0.0);
    std::fill(log_weights_.begin(), log_weights_.end(), -INFINITY);
    weights_[0] = 1.0;
    log_weights_[0] = 0.0;
    return;
  }
  const double ch = std::cosh(half);
  const double log_p0 = -2.0 * std::log(ch);
  const double log_ratio = 2.0 * std::log(std::tanh(half));
  for (std::size_t k = 0; k < n; ++k) {
    log_weights_[k] = log_p0 + static_cast<double>(k) * log_ratio;
    weights_[k] = std::exp(log_weights_[k]);
  }
}

double ReducedState::truncation_deficit() const {
  // The closed-form tail s^{k_max+1} avoids summing to one and subtracting.
  const double half = 0.5 * std::abs(eta_.value);
  if (half == 0.0) return 0.0;
  const double t = std::tanh(half);
  return std::pow(t * t, k_max_ + 1);
}

double ReducedState::weight_entropy() const {
  double s = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] > 0.0) s -= weights_[k] * log_weights_[k];
  }
  return s;
}

double density_series(const ReducedState& state, double x, double xp) {
  const auto n = static_cast<std::size_t>(state.k_max()) + 1;
  std::vector<double> hx(n);
  std::vector<double> hxp(n);
  hermite_functions(x, hx);
  hermite_functions(xp, hxp);
  const auto w = state.weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += w[k] * hx[k] * hxp[k];
  return sum;
}

double density_quadrature_extent(CouplingRapidity eta) {
  return 6.0 * std::exp(0.5 * std::abs(eta.value));
}

double density_quadrature(CouplingRapidity eta, double x, double xp, const quad::Options& opts) {
  const double extent = density_quadrature_extent(eta);
  // The integrand is a Gaussian in x2 of width 1/sqrt(2 cosh eta); start with
  // panels about two widths across.
  const double width = 1.0 / std::sqrt(2.0 * std::cosh(eta.value));
  quad::Options o = opts;
  o.initial_panels = std::max<std::size_t>(
      opts.initial_panels, static_cast<std::size_t>(std::ceil(extent / width)));
  auto integrand = [&](double x2) {
    return ground_state_amplitude(eta, x, x2) * ground_state_amplitude(eta, xp, x2);
  };
  try {
    return quad::integrate(integrand, -extent, extent, o).value;
  } catch (const QuadratureError& e) {
    std::ostringstream msg;
    msg << "density_quadrature(eta=" << eta.value << ", x=" << x << ", x'=" << xp
        << "): " << e.what();
    throw QuadratureError(msg.str(), e.achieved_error());
  }
}

double purity(CouplingRapidity eta) { return 1.0 / std::cosh(eta.value); }

double purity_series(CouplingRapidity eta, int k_max) {
  if (k_max < 0) throw DomainError("purity_series: k_max must be >= 0");
  const double half = 0.5 * eta.value;
  const double t = std::tanh(half);
  const double r = t * t * t * t;
  const double c2 = std::cosh(half) * std::cosh(half);
  double sum = 0.0;
  for (int k = 0; k <= k_max; ++k) sum = sum * r + 1.0;
  return sum / (c2 * c2);
}

double entropy(CouplingRapidity eta) {
  const double half = 0.5 * std::abs(eta.value);
  if (half == 0.0) return 0.0;
  // cosh^2 ln cosh^2 - sinh^2 ln sinh^2 rewritten as
  // ln cosh^2 - sinh^2 ln tanh^2 to avoid cancelling two large terms.
  const double sh = std::sinh(half);
  return 2.0 * std::log(std::cosh(half)) - 2.0 * sh * sh * std::log(std::tanh(half));
}

double ThermalMap::boltzmann_factor() const {
  if (temperature == 0.0) return 0.0;
  return std::exp(-omega / temperature);
}

ThermalMap effective_temperature(CouplingRapidity eta, double omega) {
  if (!(omega > 0.0)) throw DomainError("effective_temperature: omega must be positive");
  const double half = 0.5 * std::abs(eta.value);
  if (half == 0.0) return ThermalMap{omega, 0.0};
  const double neg_log_t = -std::log(std::tanh(half));
  if (!(neg_log_t > 0.0)) {
    std::ostringstream msg;
    msg << "effective_temperature: tanh(eta/2) rounds to 1 at eta = " << eta.value;
    throw DomainError(msg.str());
  }
  return ThermalMap{omega, omega / neg_log_t};
}

CouplingRapidity eta_from_temperature(const ThermalMap& thermal) {
  if (!(thermal.omega > 0.0)) throw DomainError("eta_from_temperature: omega must be positive");
  if (!(thermal.temperature >= 0.0)) {
    throw DomainError("eta_from_temperature: temperature must be non-negative");
  }
  if (thermal.temperature == 0.0) return CouplingRapidity(0.0);
  return CouplingRapidity(2.0 * std::atanh(thermal.boltzmann_factor()));
}

double uncertainty_product(CouplingRapidity eta) {
  const ReducedState state(eta);
  const auto w = state.weights();
  double second_moment = 0.0;
  for (std::size_t k = w.size(); k-- > 0;) {
    second_moment += w[k] * (static_cast<double>(k) + 0.5);
  }
  // <x^2> and <p^2> coincide because phi_k is its own Fourier transform up to
  // a phase, so the product of spreads is just <x^2>.
  return second_moment;
}

}  // namespace covosc
