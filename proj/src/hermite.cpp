#include "covosc/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "covosc/errors.hpp"

namespace covosc {

namespace {

constexpr double kRescaleAbove = 1e200;
constexpr double kRescaleBy = 1e-200;
const double kLogRescale = std::log(kRescaleBy);

// pi^{-1/4}
const double kSeed = std::pow(std::numbers::pi, -0.25);

}  // namespace

void hermite_functions(double x, std::span<double> out) {
  if (out.empty()) return;
  const std::size_t n = out.size();

  // Values are carried as mantissa * exp(log_scale).
  double log_scale = -0.5 * x * x;
  double factor = std::exp(log_scale);
  double prev = 0.0;
  double curr = kSeed;
  out[0] = curr * factor;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next =
        std::sqrt(2.0 / (kd + 1.0)) * x * curr - std::sqrt(kd / (kd + 1.0)) * prev;
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescaleAbove) {
      curr *= kRescaleBy;
      prev *= kRescaleBy;
      log_scale -= kLogRescale;
      factor = std::exp(log_scale);
    }
    out[k + 1] = curr * factor;
  }
}

std::vector<double> hermite_functions(int kmax, double x) {
  if (kmax < 0) throw DomainError("hermite_functions: kmax must be >= 0, got " + std::to_string(kmax));
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  hermite_functions(x, out);
  return out;
}

double hermite_function(int k, double x) {
  if (k < 0) throw DomainError("hermite_function: k must be >= 0, got " + std::to_string(k));
  return hermite_functions(k, x).back();
}

GaussHermiteRule::GaussHermiteRule(int npoints) {
  if (npoints < 1) throw DomainError("GaussHermiteRule: need at least one node");
  const int n = npoints;
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);

  // Newton iteration on the orthonormal polynomial p_n, seeded with the usual
  // asymptotic guesses for the largest roots and extrapolation for the rest.
  // Roots are symmetric; only the positive half is solved for.
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    const double nd = static_cast<double>(n);
    if (i == 0) {
      z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(nd, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * nodes[1];
    } else {
      z = 2.0 * z - nodes[static_cast<std::size_t>(i - 2)];
    }

    double deriv = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = kSeed;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double jd = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / jd) * p2 - std::sqrt((jd - 1.0) / jd) * p3;
      }
      deriv = std::sqrt(2.0 * nd) * p2;
      const double z_old = z;
      z = z_old - p1 / deriv;
      if (std::abs(z - z_old) <= 1e-15 * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("GaussHermiteRule: Newton iteration did not converge for n=" +
                               std::to_string(n));
    }
    nodes[static_cast<std::size_t>(i)] = z;
    weights[static_cast<std::size_t>(i)] = 2.0 / (deriv * deriv);
  }

  // The loop above fills from the largest positive root downward; lay the
  // rule out ascending with the mirror image.
  std::vector<double> pos_nodes(nodes.begin(), nodes.begin() + half);
  std::vector<double> pos_weights(weights.begin(), weights.begin() + half);
  for (int i = 0; i < half; ++i) {
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    const auto src = static_cast<std::size_t>(i);
    nodes[hi] = pos_nodes[src];
    weights[hi] = pos_weights[src];
    nodes[lo] = -pos_nodes[src];
    weights[lo] = pos_weights[src];
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

}  // namespace covosc
