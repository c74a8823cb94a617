#include "covosc/covariant_squeeze.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "covosc/errors.hpp"

namespace covosc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

// exp{-(a u^2 + b v^2)/2} with a = e^{-2 eta}, b = e^{2 eta}.
double squeezed_gaussian(double eta, double u, double v) {
  const double b = std::exp(2.0 * eta);
  return kInvSqrtPi * std::exp(-0.5 * (u * u / b + b * v * v));
}

}  // namespace

SpacetimePoint lorentz_boost(const SpacetimePoint& p, BoostRapidity eta) {
  const double ch = std::cosh(eta.value);
  const double sh = std::sinh(eta.value);
  return {p.z * ch + p.t * sh, p.z * sh + p.t * ch};
}

LightConePoint to_light_cone(const SpacetimePoint& p) {
  return {(p.z + p.t) * kInvSqrt2, (p.z - p.t) * kInvSqrt2};
}

SpacetimePoint from_light_cone(const LightConePoint& p) {
  return {(p.u + p.v) * kInvSqrt2, (p.u - p.v) * kInvSqrt2};
}

LightConePoint boost_light_cone(const LightConePoint& p, BoostRapidity eta) {
  const double e = std::exp(eta.value);
  return {e * p.u, p.v / e};
}

HadronVariables hadron_variables(const QuarkPair& pair) {
  return {0.5 * (pair.x_a + pair.x_b), (0.5 * kInvSqrt2) * (pair.x_a - pair.x_b)};
}

QuarkPair quark_positions(const HadronVariables& vars) {
  // x_a - x_b = 2 sqrt2 x
  const FourVector half_diff = kSqrt2 * vars.separation;
  return {vars.hadron + half_diff, vars.hadron - half_diff};
}

MomentumVariables momentum_variables(const MomentumPair& pair) {
  MomentumVariables out;
  out.total = pair.p_a + pair.p_b;
  out.separation = kSqrt2 * (pair.p_a - pair.p_b);
  out.q_u = (out.separation.t - out.separation.z) * kInvSqrt2;
  out.q_v = (out.separation.t + out.separation.z) * kInvSqrt2;
  return out;
}

SpacetimePoint momentum_from_light_cone(double q_u, double q_v) {
  return {(q_v - q_u) * kInvSqrt2, (q_u + q_v) * kInvSqrt2};
}

double spacetime_wavefunction(BoostRapidity eta, double z, double t) {
  const LightConePoint lc = to_light_cone({z, t});
  return squeezed_gaussian(eta.value, lc.u, lc.v);
}

double momentum_wavefunction(BoostRapidity eta, double qz, double q0) {
  const double q_u = (q0 - qz) * kInvSqrt2;
  const double q_v = (q0 + qz) * kInvSqrt2;
  return squeezed_gaussian(eta.value, q_u, q_v);
}

double wavefunction(const WavefunctionParams& params, double longitudinal, double timelike) {
  return params.space == WaveSpace::SpaceTime
             ? spacetime_wavefunction(params.eta, longitudinal, timelike)
             : momentum_wavefunction(params.eta, longitudinal, timelike);
}

double marginal_width(const WavefunctionParams& params, WidthAxis) {
  return std::sqrt(0.5 * std::cosh(2.0 * params.eta.value));
}

double wavefunction_extent(BoostRapidity eta) { return 6.0 * std::exp(std::abs(eta.value)); }

namespace {

// Moment of |psi|^2 weighted by axis^power, integrated longitudinal-inner.
double squared_moment(const WavefunctionParams& params, WidthAxis axis, int power,
                      const quad::Options& opts) {
  const double extent = wavefunction_extent(params.eta);
  // At fixed timelike coordinate |psi|^2 is a Gaussian of width
  // 1/sqrt(2 cosh 2eta) in the longitudinal one.
  const double slice_width = 1.0 / std::sqrt(2.0 * std::cosh(2.0 * params.eta.value));

  quad::Options inner = opts;
  inner.abs_tol = opts.abs_tol / (20.0 * extent);
  inner.initial_panels = std::max<std::size_t>(
      opts.initial_panels, static_cast<std::size_t>(std::ceil(extent / slice_width)));
  quad::Options outer = opts;
  outer.initial_panels = std::max<std::size_t>(opts.initial_panels, 32);

  auto integrand = [&](double l, double tl) {
    const double psi = wavefunction(params, l, tl);
    const double coord = axis == WidthAxis::Longitudinal ? l : tl;
    return std::pow(coord, power) * psi * psi;
  };
  return quad::integrate_2d(integrand, quad::Box{-extent, extent, -extent, extent}, inner, outer)
      .value;
}

}  // namespace

double squared_norm_by_quadrature(const WavefunctionParams& params, const quad::Options& opts) {
  return squared_moment(params, WidthAxis::Longitudinal, 0, opts);
}

double marginal_width_by_quadrature(const WavefunctionParams& params, WidthAxis axis,
                                    const quad::Options& opts) {
  const double m0 = squared_moment(params, axis, 0, opts);
  const double m2 = squared_moment(params, axis, 2, opts);
  return std::sqrt(m2 / m0);
}

double fkr_min_extent(BoostRapidity eta) { return 4.0 * std::exp(std::abs(eta.value)); }

FkrResult fkr_residual(BoostRapidity eta, const FkrGrid& grid) {
  const double h = grid.step;
  const double min_extent = fkr_min_extent(eta);
  const double extent = grid.half_extent > 0.0 ? grid.half_extent : min_extent;
  if (!(h > 0.0) || !std::isfinite(h)) throw GridError("fkr_residual: step must be positive");
  if (extent < min_extent * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "fkr_residual: grid half-extent " << extent << " does not cover the support "
        << min_extent;
    throw GridError(msg.str());
  }
  const auto half_n = static_cast<long>(std::ceil(extent / h - 1e-9));
  if (half_n < 4) throw GridError("fkr_residual: step too coarse for the grid extent");
  const auto n = static_cast<std::size_t>(2 * half_n + 1);

  auto coord = [&](std::size_t i) { return h * (static_cast<double>(i) - static_cast<double>(half_n)); };
  auto fill_row = [&](std::size_t j, std::vector<double>& row) {
    const double t = coord(j);
    for (std::size_t i = 0; i < n; ++i) row[i] = spacetime_wavefunction(eta, coord(i), t);
  };

  // Rolling window of three t-rows; the operator is evaluated on the middle
  // one and handed to `visit` together with psi.
  const double inv_h2 = 1.0 / (h * h);
  auto sweep = [&](auto&& visit) {
    std::vector<double> below(n), mid(n), above(n);
    fill_row(0, below);
    fill_row(1, mid);
    for (std::size_t j = 1; j + 1 < n; ++j) {
      fill_row(j + 1, above);
      const double t = coord(j);
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const double z = coord(i);
        const double psi = mid[i];
        const double d_tt = (above[i] - 2.0 * psi + below[i]) * inv_h2;
        const double d_zz = (mid[i + 1] - 2.0 * psi + mid[i - 1]) * inv_h2;
        visit(0.5 * ((t * t - z * z) * psi - (d_tt - d_zz)), psi);
      }
      std::swap(below, mid);
      std::swap(mid, above);
    }
  };

  constexpr double kFloor = 1e-6;
  FkrResult out;
  double num = 0.0;
  double den = 0.0;
  sweep([&](double op, double psi) {
    if (std::abs(psi) > kFloor) {
      num += op * psi;
      den += psi * psi;
      ++out.fitted_points;
    }
  });
  out.lambda_est = den > 0.0 ? num / den : 0.0;
  sweep([&](double op, double psi) {
    out.max_residual = std::max(out.max_residual, std::abs(op - out.lambda_est * psi));
  });
  if (grid.residual_tol && out.max_residual > *grid.residual_tol) {
    std::ostringstream msg;
    msg << "fkr_residual: step " << h << " gives residual " << out.max_residual
        << " above the requested " << *grid.residual_tol;
    throw GridError(msg.str());
  }
  return out;
}

}  // namespace covosc
