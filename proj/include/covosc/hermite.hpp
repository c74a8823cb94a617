#pragma once

// Normalized Hermite functions
//
//   phi_k(x) = (2^k k! sqrt(pi))^{-1/2} H_k(x) exp(-x^2/2),
//
// the energy eigenfunctions of a unit-frequency oscillator. They are built by
// the three-term recurrence on the normalized functions themselves,
//
//   phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1},
//
// with a running power-of-two rescale so neither the Gaussian seed nor the
// large-k growth leaves double range.

#include <cstddef>
#include <span>
#include <vector>

namespace covosc {

/// phi_k(x). Throws DomainError for k < 0.
double hermite_function(int k, double x);

/// phi_0(x), ..., phi_kmax(x) written into out[0..kmax]; out.size() must be
/// kmax + 1.
void hermite_functions(double x, std::span<double> out);

std::vector<double> hermite_functions(int kmax, double x);

/// n-point Gauss-Hermite rule for weight exp(-x^2), nodes ascending.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussHermiteRule(int npoints);

  std::size_t size() const { return nodes.size(); }

  /// Integrates g(x) exp(-x^2) over the real line.
  template <class F>
  double integrate_weighted(F&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
    return sum;
  }
};

}  // namespace covosc
