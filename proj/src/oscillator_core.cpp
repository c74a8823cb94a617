#include "covosc/oscillator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "covosc/errors.hpp"
#include "covosc/hermite.hpp"

namespace covosc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

}  // namespace

CoupledSystem::CoupledSystem(double mass, double spring_k, double coupling_c)
    : mass_(mass), spring_k_(spring_k), coupling_c_(coupling_c) {
  if (!(mass > 0.0)) throw DomainError("CoupledSystem: mass must be positive");
  if (!(spring_k > 0.0)) throw DomainError("CoupledSystem: spring constant K must be positive");
  if (!(std::abs(coupling_c) < spring_k)) {
    std::ostringstream msg;
    msg << "CoupledSystem: |C| = " << std::abs(coupling_c) << " must be below K = " << spring_k
        << " (a normal-mode frequency vanishes)";
    throw DomainError(msg.str());
  }
}

CouplingRapidity coupling_eta(double spring_k, double coupling_c) {
  if (!(spring_k > 0.0) || !(std::abs(coupling_c) < spring_k)) {
    std::ostringstream msg;
    msg << "coupling_eta: requires |C| < K, got K = " << spring_k << ", C = " << coupling_c;
    throw DomainError(msg.str());
  }
  // ln sqrt((K+C)/(K-C)) = atanh(C/K)
  return CouplingRapidity(std::atanh(coupling_c / spring_k));
}

CouplingRapidity coupling_eta(const CoupledSystem& system) {
  return coupling_eta(system.spring_k(), system.coupling_c());
}

NormalCoords to_normal_coords(double x1, double x2) {
  return {(x1 - x2) * kInvSqrt2, (x1 + x2) * kInvSqrt2};
}

NormalCoords from_normal_coords(const NormalCoords& y) {
  return {(y.y2 + y.y1) * kInvSqrt2, (y.y2 - y.y1) * kInvSqrt2};
}

NormalCoords normal_mode_springs(const CoupledSystem& system) {
  return {system.spring_k() - system.coupling_c(), system.spring_k() + system.coupling_c()};
}

double hamiltonian(const CoupledSystem& system, const PhasePoint& pt) {
  const double kinetic = (pt.p1 * pt.p1 + pt.p2 * pt.p2) / (2.0 * system.mass());
  const double potential =
      0.5 * (system.spring_k() * (pt.x1 * pt.x1 + pt.x2 * pt.x2) +
             2.0 * system.coupling_c() * pt.x1 * pt.x2);
  return kinetic + potential;
}

double hamiltonian_normal(const CoupledSystem& system, const NormalCoords& y,
                          const NormalCoords& p) {
  const NormalCoords springs = normal_mode_springs(system);
  const double kinetic = (p.y1 * p.y1 + p.y2 * p.y2) / (2.0 * system.mass());
  return kinetic + 0.5 * (springs.y1 * y.y1 * y.y1 + springs.y2 * y.y2 * y.y2);
}

double ground_state_amplitude(CouplingRapidity eta, double x1, double x2) {
  const NormalCoords y = to_normal_coords(x1, x2);
  const double e = std::exp(eta.value);
  return kInvSqrtPi * std::exp(-0.5 * (e * y.y1 * y.y1 + y.y2 * y.y2 / e));
}

double schmidt_weight(CouplingRapidity eta, int k) {
  if (k < 0) throw DomainError("schmidt_weight: k must be >= 0, got " + std::to_string(k));
  const double half = 0.5 * eta.value;
  if (k == 0) return 1.0 / std::cosh(half);
  return std::pow(std::tanh(half), k) / std::cosh(half);
}

std::vector<double> schmidt_weights(CouplingRapidity eta, int kmax) {
  if (kmax < 0) throw DomainError("schmidt_weights: kmax must be >= 0");
  std::vector<double> c(static_cast<std::size_t>(kmax) + 1);
  const double t = std::tanh(0.5 * eta.value);
  double v = 1.0 / std::cosh(0.5 * eta.value);
  for (auto& ck : c) {
    ck = v;
    v *= t;
  }
  return c;
}

double schmidt_series(CouplingRapidity eta, int kmax, double x1, double x2) {
  const std::vector<double> c = schmidt_weights(eta, kmax);
  const std::vector<double> h1 = hermite_functions(kmax, x1);
  const std::vector<double> h2 = hermite_functions(kmax, x2);
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * h1[k] * h2[k];
  return sum;
}

int default_truncation_order(CouplingRapidity eta) {
  const double a = std::abs(eta.value);
  const int base = static_cast<int>(std::ceil(30.0 + 20.0 * a));
  if (a == 0.0) return base;

  // s = tanh^2(a/2) is the ratio of consecutive reduced-state weights.
  const double one_minus_t = 2.0 / (std::exp(a) + 1.0);
  const double neg_ln_s = -2.0 * std::log1p(-one_minus_t);
  if (!(neg_ln_s > 0.0) || !std::isfinite(neg_ln_s)) {
    throw DomainError("default_truncation_order: |eta| too large for a finite series");
  }
  const double ch = std::cosh(0.5 * a);
  const double sh = std::sinh(0.5 * a);
  const double neg_ln_1ms = 2.0 * std::log(ch);
  const double s_over_1ms = sh * sh;

  // log of the worst discarded tail (the entropy sum dominates the others)
  auto log_tail = [&](double k) {
    const double bracket = 1.0 + neg_ln_1ms + neg_ln_s * ((k + 1.0) + s_over_1ms);
    return -(k + 1.0) * neg_ln_s + std::log(bracket);
  };
  const double target = std::log(1e-16);

  double k = std::max(static_cast<double>(base), std::ceil(-target / neg_ln_s - 1.0));
  while (log_tail(k) > target) {
    if (k >= kMaxTruncationOrder) break;
    k += std::max(1.0, std::floor(k / 64.0));
  }
  if (k > kMaxTruncationOrder || log_tail(std::min(k, double(kMaxTruncationOrder))) > target) {
    std::ostringstream msg;
    msg << "default_truncation_order: |eta| = " << a << " needs more than "
        << kMaxTruncationOrder << " terms";
    throw DomainError(msg.str());
  }
  return static_cast<int>(k);
}

}  // namespace covosc
