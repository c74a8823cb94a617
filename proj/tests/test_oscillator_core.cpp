#include <cmath>
#include <numbers>
#include <random>

#include "covosc/errors.hpp"
#include "covosc/oscillator_core.hpp"
#include "covosc/quadrature.hpp"
#include "doctest.h"

using namespace covosc;

namespace {
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
}

TEST_CASE("coupled system rejects degenerate parameters") {
  CHECK_NOTHROW(CoupledSystem(1.0, 5.0, 3.0));
  CHECK_THROWS_AS(CoupledSystem(0.0, 5.0, 3.0), DomainError);
  CHECK_THROWS_AS(CoupledSystem(1.0, -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(CoupledSystem(1.0, 5.0, 5.0), DomainError);
  CHECK_THROWS_AS(CoupledSystem(1.0, 5.0, -7.0), DomainError);
  CHECK_THROWS_AS(coupling_eta(5.0, 5.0), DomainError);
}

TEST_CASE("coupling eta") {
  CHECK(coupling_eta(CoupledSystem(1.0, 1.0, 0.0)).value == 0.0);
  CHECK(coupling_eta(CoupledSystem(1.0, 5.0, 3.0)).value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(coupling_eta(CoupledSystem(1.0, 5.0, -3.0)).value == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  // e^{2 eta} is the ratio of the normal-mode spring constants
  const CoupledSystem sys(2.0, 7.0, 2.5);
  const NormalCoords springs = normal_mode_springs(sys);
  CHECK(std::exp(2.0 * coupling_eta(sys).value) == doctest::Approx(springs.y2 / springs.y1).epsilon(1e-14));
}

TEST_CASE("normal coordinates") {
  const double r2 = std::sqrt(2.0);
  auto y = to_normal_coords(1.0, 1.0);
  CHECK(y.y1 == 0.0);
  CHECK(y.y2 == doctest::Approx(r2));
  y = to_normal_coords(1.0, -1.0);
  CHECK(y.y1 == doctest::Approx(r2));
  CHECK(y.y2 == 0.0);
  y = to_normal_coords(3.0, 1.0);
  CHECK(y.y1 == doctest::Approx(r2).epsilon(1e-15));
  CHECK(y.y2 == doctest::Approx(2.0 * r2).epsilon(1e-15));
}

TEST_CASE("normal coordinates round trip for |x| <= 1e6") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x1 = dist(rng);
    const double x2 = dist(rng);
    const NormalCoords back = from_normal_coords(to_normal_coords(x1, x2));
    const double scale = std::max({1.0, std::abs(x1), std::abs(x2)});
    worst = std::max({worst, std::abs(back.y1 - x1) / scale, std::abs(back.y2 - x2) / scale});
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("hamiltonian separates in normal coordinates") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::uniform_real_distribution<double> cdist(-0.95, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const double k = 0.5 + std::abs(dist(rng));
    const CoupledSystem sys(0.3 + std::abs(dist(rng)), k, cdist(rng) * k);
    const PhasePoint pt{dist(rng), dist(rng), dist(rng), dist(rng)};
    const NormalCoords y = to_normal_coords(pt.x1, pt.x2);
    const NormalCoords p = to_normal_coords(pt.p1, pt.p2);
    const double h = hamiltonian(sys, pt);
    CHECK(hamiltonian_normal(sys, y, p) == doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("ground state amplitude") {
  CHECK(ground_state_amplitude(CouplingRapidity(0.0), 0.0, 0.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-15));
  for (double x1 : {-2.0, 0.3, 1.7}) {
    for (double x2 : {-1.1, 0.0, 2.4}) {
      CHECK(ground_state_amplitude(CouplingRapidity(0.0), x1, x2) ==
            doctest::Approx(std::exp(-0.5 * (x1 * x1 + x2 * x2)) * kInvSqrtPi).epsilon(1e-14));
    }
  }
}

TEST_CASE("ground state is normalized: 2-D quadrature oracle") {
  for (double eta : {0.0, 1.0, 3.0}) {
    const CouplingRapidity e(eta);
    // widest normal-mode width e^{|eta|/2}; narrowest e^{-|eta|/2}
    const double extent = 10.0 * std::exp(0.5 * eta);
    quad::Options inner;
    inner.initial_panels = static_cast<std::size_t>(std::ceil(2.0 * extent / std::exp(-0.5 * eta)));
    inner.abs_tol = 1e-13;
    quad::Options outer;
    outer.initial_panels = 32;
    const auto r = quad::integrate_2d(
        [&](double x1, double x2) {
          const double psi = ground_state_amplitude(e, x1, x2);
          return psi * psi;
        },
        quad::Box{-extent, extent, -extent, extent}, inner, outer);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("schmidt weights") {
  CHECK(schmidt_weight(CouplingRapidity(0.0), 0) == 1.0);
  for (int k = 1; k < 5; ++k) CHECK(schmidt_weight(CouplingRapidity(0.0), k) == 0.0);
  CHECK_THROWS_AS(schmidt_weight(CouplingRapidity(1.0), -1), DomainError);

  for (double eta : {0.3, 1.0, 2.0, -1.5}) {
    const CouplingRapidity e(eta);
    // partial sums of c_k^2 increase toward 1
    double sum = 0.0;
    double prev = 0.0;
    for (int k = 0; k <= 400; ++k) {
      const double c = schmidt_weight(e, k);
      sum += c * c;
      CHECK(sum >= prev);
      prev = sum;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    const auto all = schmidt_weights(e, 10);
    for (int k = 0; k <= 10; ++k) {
      CHECK(all[static_cast<std::size_t>(k)] == doctest::Approx(schmidt_weight(e, k)).epsilon(1e-14));
    }
  }
}

TEST_CASE("schmidt series reconstructs the closed-form ground state") {
  const CouplingRapidity eta(2.0);
  double worst = 0.0;
  for (double x1 = -4.0; x1 <= 4.0 + 1e-9; x1 += 0.25) {
    for (double x2 = -4.0; x2 <= 4.0 + 1e-9; x2 += 0.25) {
      worst = std::max(worst, std::abs(schmidt_series(eta, 60, x1, x2) -
                                       ground_state_amplitude(eta, x1, x2)));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("schmidt reconstruction error decreases with truncation order") {
  const CouplingRapidity eta(1.5);
  auto max_err = [&](int kmax) {
    double worst = 0.0;
    for (double x1 = -3.0; x1 <= 3.0 + 1e-9; x1 += 0.5) {
      for (double x2 = -3.0; x2 <= 3.0 + 1e-9; x2 += 0.5) {
        worst = std::max(worst, std::abs(schmidt_series(eta, kmax, x1, x2) -
                                         ground_state_amplitude(eta, x1, x2)));
      }
    }
    return worst;
  };
  double prev = max_err(0);
  for (int kmax = 10; kmax <= 80; kmax += 10) {
    const double err = max_err(kmax);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-10);
}

TEST_CASE("default truncation order") {
  CHECK(default_truncation_order(CouplingRapidity(0.0)) == 30);
  CHECK(default_truncation_order(CouplingRapidity(1.0)) >= 50);
  // symmetric in eta and increasing in |eta|
  CHECK(default_truncation_order(CouplingRapidity(-2.0)) == default_truncation_order(CouplingRapidity(2.0)));
  int prev = 0;
  for (double eta = 0.0; eta <= 8.0; eta += 0.5) {
    const int k = default_truncation_order(CouplingRapidity(eta));
    CHECK(k >= prev);
    prev = k;
  }
  // tail mass below 1e-12
  for (double eta : {1.0, 4.0, 6.0}) {
    const int k = default_truncation_order(CouplingRapidity(eta));
    const double t = std::tanh(eta / 2);
    CHECK(std::pow(t * t, k + 1) < 1e-12);
  }
  CHECK_THROWS_AS(default_truncation_order(CouplingRapidity(40.0)), DomainError);
}
