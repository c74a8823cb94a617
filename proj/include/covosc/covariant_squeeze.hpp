#pragma once

// Light-cone kinematics and the Lorentz-squeezed oscillator wave functions of
// a two-quark hadron. Units: c = 1, metric (+, -) on (t, z). Transverse
// coordinates do not take part in a longitudinal boost and are carried along
// unchanged by the four-vector helpers.

#include <cstddef>
#include <optional>

#include "covosc/quadrature.hpp"
#include "covosc/rapidity.hpp"

namespace covosc {

struct SpacetimePoint {
  double z = 0.0;
  double t = 0.0;

  /// z^2 - t^2, the invariant interval in the longitudinal plane.
  double interval() const { return z * z - t * t; }
};

struct LightConePoint {
  double u = 0.0;
  double v = 0.0;
};

struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend FourVector operator*(double s, const FourVector& a) {
    return {s * a.t, s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

/// Space-time positions of the two quarks.
struct QuarkPair {
  FourVector x_a;
  FourVector x_b;
};

/// Hadron position X = (x_a + x_b)/2 and quark separation x = (x_a - x_b)/(2 sqrt2).
struct HadronVariables {
  FourVector hadron;
  FourVector separation;
};

struct MomentumPair {
  FourVector p_a;
  FourVector p_b;
};

/// P = p_a + p_b, q = sqrt2 (p_a - p_b) and the light-cone components
/// q_u = (q0 - qz)/sqrt2, q_v = (q0 + qz)/sqrt2.
struct MomentumVariables {
  FourVector total;
  FourVector separation;
  double q_u = 0.0;
  double q_v = 0.0;
};

/// z' = z cosh(eta) + t sinh(eta), t' = z sinh(eta) + t cosh(eta).
SpacetimePoint lorentz_boost(const SpacetimePoint& p, BoostRapidity eta);

/// u = (z + t)/sqrt2, v = (z - t)/sqrt2.
LightConePoint to_light_cone(const SpacetimePoint& p);
SpacetimePoint from_light_cone(const LightConePoint& p);

/// u' = e^eta u, v' = e^-eta v.
LightConePoint boost_light_cone(const LightConePoint& p, BoostRapidity eta);

HadronVariables hadron_variables(const QuarkPair& pair);
QuarkPair quark_positions(const HadronVariables& vars);

MomentumVariables momentum_variables(const MomentumPair& pair);
/// (q_z, q_0) recovered from (q_u, q_v); returned as a SpacetimePoint with
/// z = q_z and t = q_0.
SpacetimePoint momentum_from_light_cone(double q_u, double q_v);

enum class WaveSpace { SpaceTime, MomentumEnergy };

enum class WidthAxis { Longitudinal, Timelike };

struct WavefunctionParams {
  BoostRapidity eta;
  WaveSpace space = WaveSpace::SpaceTime;
};

/// pi^{-1/2} exp{-(e^{-2 eta} u^2 + e^{2 eta} v^2)/2} with (u, v) from (z, t).
double spacetime_wavefunction(BoostRapidity eta, double z, double t);

/// Same Gaussian in (q_u, q_v) with q_u = (q0 - qz)/sqrt2, q_v = (q0 + qz)/sqrt2.
double momentum_wavefunction(BoostRapidity eta, double qz, double q0);

/// Dispatches on params.space; `longitudinal` is z or q_z, `timelike` is t or q_0.
double wavefunction(const WavefunctionParams& params, double longitudinal, double timelike);

/// Standard deviation of |psi|^2 projected on one axis: sqrt(cosh(2 eta)/2),
/// the same for both axes and both spaces.
double marginal_width(const WavefunctionParams& params, WidthAxis axis);

/// Half-width of the square used for 2-D quadrature of |psi|^2.
double wavefunction_extent(BoostRapidity eta);

/// Integral of |psi|^2 over the plane by nested adaptive quadrature.
double squared_norm_by_quadrature(const WavefunctionParams& params, const quad::Options& opts = {});

/// Marginal width computed from second moments of |psi|^2 by nested adaptive
/// quadrature, normalized by the quadrature norm.
double marginal_width_by_quadrature(const WavefunctionParams& params, WidthAxis axis,
                                    const quad::Options& opts = {});

/// Sampling for the finite-difference check of the oscillator equation.
struct FkrGrid {
  double step = 1e-2;
  /// Half-width of the square grid; 0 selects the minimum 4 e^{|eta|}.
  double half_extent = 0.0;
  /// When set, the residual must come in under this bound or GridError is thrown.
  std::optional<double> residual_tol;
};

struct FkrResult {
  double lambda_est = 0.0;
  double max_residual = 0.0;
  std::size_t fitted_points = 0;
};

/// Minimum half-extent accepted by fkr_residual.
double fkr_min_extent(BoostRapidity eta);

/// Applies (1/2){(t^2 - z^2) - (d_t^2 - d_z^2)} to the boosted wave function by
/// central differences on the grid, fits the eigenvalue by least squares over
/// points with |psi| > 1e-6 and reports the largest |Op psi - lambda psi|.
FkrResult fkr_residual(BoostRapidity eta, const FkrGrid& grid = {});

}  // namespace covosc
