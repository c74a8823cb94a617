#pragma once

// Reduced density matrix of the first oscillator after tracing out the
// second one. In the Hermite basis it is diagonal with thermal weights
//
//   p_k = tanh^{2k}(eta/2) / cosh^2(eta/2),
//
// so purity, entropy and the effective temperature all follow from eta.
// Natural units throughout: hbar = k_Boltzmann = 1.

#include <span>
#include <vector>

#include "covosc/quadrature.hpp"
#include "covosc/rapidity.hpp"

namespace covosc {

class ReducedState {
 public:
  /// Truncated at default_truncation_order(eta).
  explicit ReducedState(CouplingRapidity eta);
  /// Throws DomainError for k_max < 0.
  ReducedState(CouplingRapidity eta, int k_max);

  CouplingRapidity eta() const { return eta_; }
  int k_max() const { return k_max_; }
  std::span<const double> weights() const { return weights_; }

  /// 1 - sum of the retained weights.
  double truncation_deficit() const;

  /// -sum p_k ln p_k over the retained weights.
  double weight_entropy() const;

 private:
  CouplingRapidity eta_;
  int k_max_;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
};

/// rho(x, x') from the truncated Hermite series.
double density_series(const ReducedState& state, double x, double xp);

/// rho(x, x') as the integral over x2 of psi(x, x2) psi(x', x2), taken on
/// |x2| <= 6 e^{|eta|/2}. Throws QuadratureError if the tolerance is missed.
double density_quadrature(CouplingRapidity eta, double x, double xp,
                          const quad::Options& opts = {});

/// Integration half-width used by density_quadrature.
double density_quadrature_extent(CouplingRapidity eta);

/// Tr(rho^2) = 1/cosh(eta).
double purity(CouplingRapidity eta);

/// Tr(rho^2) as the weighted geometric series through order k_max.
double purity_series(CouplingRapidity eta, int k_max);

/// Von Neumann entropy
///   cosh^2(eta/2) ln cosh^2(eta/2) - sinh^2(eta/2) ln sinh^2(eta/2),
/// even in eta.
double entropy(CouplingRapidity eta);

struct ThermalMap {
  double omega = 1.0;
  double temperature = 0.0;

  /// exp(-omega/T), which equals tanh(|eta|/2) by construction.
  double boltzmann_factor() const;
};

/// Temperature at which tanh(|eta|/2) = exp(-omega/T). eta = 0 gives T = 0
/// exactly; negative eta uses |eta|. Throws DomainError for omega <= 0.
ThermalMap effective_temperature(CouplingRapidity eta, double omega);

/// Inverse map, returning eta >= 0. Throws DomainError for omega <= 0 or T < 0.
CouplingRapidity eta_from_temperature(const ThermalMap& thermal);

/// Dx * Dp of the reduced state from the mode occupation:
/// <x^2> = <p^2> = sum_k p_k (k + 1/2), which is cosh(eta)/2.
double uncertainty_product(CouplingRapidity eta);

}  // namespace covosc
