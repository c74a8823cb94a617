#pragma once

// Two identical oscillators coupled by a spring:
//
//   H = (p1^2 + p2^2)/2m + (K (x1^2 + x2^2) + 2 C x1 x2)/2.
//
// The rotation y1 = (x1 - x2)/sqrt2, y2 = (x1 + x2)/sqrt2 separates H into two
// normal modes with spring constants K - C (y1) and K + C (y2); their ratio
// is e^{2 eta} with eta = atanh(C/K).
//
// Wave-function coordinates are dimensionless throughout: lengths are
// measured in the oscillator unit, so mass and springs only enter through
// coupling_eta and the Hamiltonian helpers.

#include <vector>

#include "covosc/rapidity.hpp"

namespace covosc {

class CoupledSystem {
 public:
  /// Throws DomainError unless mass > 0, spring_k > 0 and |coupling_c| < spring_k.
  CoupledSystem(double mass, double spring_k, double coupling_c);

  double mass() const { return mass_; }
  double spring_k() const { return spring_k_; }
  double coupling_c() const { return coupling_c_; }

 private:
  double mass_;
  double spring_k_;
  double coupling_c_;
};

struct NormalCoords {
  double y1 = 0.0;
  double y2 = 0.0;
};

struct PhasePoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

/// eta with e^eta = sqrt((K + C)/(K - C)); same sign as C.
CouplingRapidity coupling_eta(const CoupledSystem& system);

/// Same as above from raw constants, throwing DomainError when |C| >= K.
CouplingRapidity coupling_eta(double spring_k, double coupling_c);

NormalCoords to_normal_coords(double x1, double x2);
/// Inverse rotation; returns (x1, x2).
NormalCoords from_normal_coords(const NormalCoords& y);

/// Spring constants of the y1 and y2 normal modes: (K - C, K + C).
NormalCoords normal_mode_springs(const CoupledSystem& system);

/// Hamiltonian in the original coordinates.
double hamiltonian(const CoupledSystem& system, const PhasePoint& point);

/// Hamiltonian in normal coordinates; p holds the normal-mode momenta.
double hamiltonian_normal(const CoupledSystem& system, const NormalCoords& y,
                          const NormalCoords& p);

/// Ground state pi^{-1/2} exp{-(e^eta y1^2 + e^-eta y2^2)/2}.
double ground_state_amplitude(CouplingRapidity eta, double x1, double x2);

/// Schmidt amplitude c_k = tanh^k(eta/2) / cosh(eta/2), so that
/// psi_eta(x1, x2) = sum_k c_k phi_k(x1) phi_k(x2) and sum_k c_k^2 = 1.
double schmidt_weight(CouplingRapidity eta, int k);

/// c_0 .. c_kmax.
std::vector<double> schmidt_weights(CouplingRapidity eta, int kmax);

/// Truncated Schmidt sum through order kmax.
double schmidt_series(CouplingRapidity eta, int kmax, double x1, double x2);

/// Series order used when none is given: at least ceil(30 + 20|eta|), raised
/// until the discarded tail of the trace, purity and entropy sums is below
/// 1e-16. Throws DomainError past kMaxTruncationOrder.
int default_truncation_order(CouplingRapidity eta);

inline constexpr int kMaxTruncationOrder = 1 << 20;

}  // namespace covosc
