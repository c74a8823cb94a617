#include <cmath>
#include <numbers>

#include "covosc/errors.hpp"
#include "covosc/oscillator_core.hpp"
#include "covosc/quadrature.hpp"
#include "covosc/reduced_state.hpp"
#include "doctest.h"

using namespace covosc;

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

// Completing the square in the x2 integral of psi(x, x2) psi(x', x2):
// rho(x, x') = exp(-(cosh/2)(x^2 + x'^2) + sinh^2 (x + x')^2 / (4 cosh)) / sqrt(pi cosh).
double density_closed_form(double eta, double x, double xp) {
  const double c = std::cosh(eta);
  const double s = std::sinh(eta);
  return std::exp(-0.5 * c * (x * x + xp * xp) + s * s * (x + xp) * (x + xp) / (4.0 * c)) /
         std::sqrt(std::numbers::pi * c);
}

double trace_of_series(const ReducedState& state) {
  const double extent = density_quadrature_extent(state.eta());
  quad::Options opts;
  opts.abs_tol = 1e-12;
  opts.initial_panels = 64;
  return quad::integrate([&](double x) { return density_series(state, x, x); }, -extent, extent, opts)
      .value;
}

}  // namespace

TEST_CASE("reduced state weights") {
  CHECK_THROWS_AS(ReducedState(CouplingRapidity(1.0), -1), DomainError);

  const ReducedState rest(CouplingRapidity(0.0));
  CHECK(rest.weights()[0] == 1.0);
  CHECK(rest.weights()[1] == 0.0);
  CHECK(rest.truncation_deficit() == 0.0);

  for (double eta : {0.5, 1.0, 2.0, 4.0, 6.0}) {
    const ReducedState state{CouplingRapidity(eta)};
    const auto w = state.weights();
    for (std::size_t k = 1; k < w.size(); ++k) {
      REQUIRE(w[k] >= 0.0);
      CHECK(w[k] < w[k - 1]);
    }
    CHECK(state.truncation_deficit() < 1e-12);
    double sum = 0.0;
    for (std::size_t k = w.size(); k-- > 0;) sum += w[k];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("thermal ratio of consecutive weights is constant in k") {
  for (double eta : {0.5, 1.0, 3.0}) {
    const ReducedState state(CouplingRapidity(eta), 200);
    const ThermalMap thermal = effective_temperature(CouplingRapidity(eta), 1.0);
    // tanh(eta/2) = exp(-omega/T), and the weights go as tanh^{2k}, so the
    // level-to-level ratio is the Boltzmann factor squared.
    const double expected = thermal.boltzmann_factor() * thermal.boltzmann_factor();
    const auto w = state.weights();
    for (std::size_t k = 0; k + 1 < 50; ++k) {
      CHECK(std::abs(w[k + 1] / w[k] - expected) <= 1e-12);
    }
  }
}

TEST_CASE("density series at zero coupling is the pure product state") {
  const ReducedState state(CouplingRapidity(0.0));
  for (double x : {-1.5, 0.0, 0.7}) {
    for (double xp : {-0.4, 0.0, 2.0}) {
      const double expected = std::exp(-0.5 * (x * x + xp * xp)) * kInvSqrtPi;
      CHECK(density_series(state, x, xp) == doctest::Approx(expected).epsilon(1e-14));
      CHECK(density_quadrature(CouplingRapidity(0.0), x, xp) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("density series, quadrature and completed square agree") {
  // reference values from an arbitrary-precision evaluation
  CHECK(density_closed_form(2.0, 1.0, 1.0) == doctest::Approx(0.2229810373510838).epsilon(1e-14));
  CHECK(density_closed_form(2.0, 0.5, -0.5) == doctest::Approx(0.1135609888851066).epsilon(1e-14));
  CHECK(density_closed_form(1.0, 0.0, 0.0) == doctest::Approx(0.4541828729607387).epsilon(1e-14));

  const ReducedState one{CouplingRapidity(1.0)};
  CHECK(std::abs(density_series(one, 0.0, 0.0) - density_quadrature(CouplingRapidity(1.0), 0.0, 0.0)) <= 1e-8);

  const ReducedState two{CouplingRapidity(2.0)};
  CHECK(std::abs(density_series(two, 0.5, -0.5) - density_quadrature(CouplingRapidity(2.0), 0.5, -0.5)) <= 1e-8);
  CHECK(std::abs(density_quadrature(CouplingRapidity(2.0), 1.0, 1.0) - density_closed_form(2.0, 1.0, 1.0)) <= 1e-10);
  CHECK(std::abs(density_series(two, 1.0, 1.0) - density_closed_form(2.0, 1.0, 1.0)) <= 1e-12);
}

TEST_CASE("density series is symmetric and agrees with quadrature on a grid") {
  for (double eta : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const ReducedState state{CouplingRapidity(eta)};
    double worst = 0.0;
    for (double x = -3.0; x <= 3.0 + 1e-9; x += 0.5) {
      for (double xp = -3.0; xp <= 3.0 + 1e-9; xp += 0.5) {
        const double s = density_series(state, x, xp);
        CHECK(std::abs(s - density_series(state, xp, x)) <= 1e-15);
        worst = std::max(worst, std::abs(s - density_quadrature(CouplingRapidity(eta), x, xp)));
      }
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("trace of the series density matrix is one") {
  for (double eta : {0.0, 1.0, 3.0, 4.0}) {
    CHECK(std::abs(trace_of_series(ReducedState{CouplingRapidity(eta)}) - 1.0) <= 1e-8);
  }
}

TEST_CASE("density quadrature reports an unreachable tolerance") {
  quad::Options opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 0.0;
  opts.max_panels = 2000;
  CHECK_THROWS_AS(density_quadrature(CouplingRapidity(1.0), 0.2, 0.3, opts), QuadratureError);
}

TEST_CASE("purity") {
  CHECK(purity(CouplingRapidity(0.0)) == 1.0);
  CHECK(purity(CouplingRapidity(1.0)) == doctest::Approx(0.6480542736638854).epsilon(1e-15));
  double prev = 1.0;
  for (double eta = 0.25; eta <= 20.0; eta += 0.25) {
    const double p = purity(CouplingRapidity(eta));
    CHECK(p < prev);
    CHECK(p > 0.0);
    prev = p;
  }
  for (double eta : {0.0, 0.5, 1.0, 2.0, 4.0, 6.0}) {
    const CouplingRapidity e(eta);
    CHECK(std::abs(purity_series(e, default_truncation_order(e)) - purity(e)) <= 1e-10);
  }
  CHECK_THROWS_AS(purity_series(CouplingRapidity(1.0), -1), DomainError);
}

TEST_CASE("entropy closed form vs weight sum") {
  CHECK(entropy(CouplingRapidity(0.0)) == 0.0);
  CHECK(entropy(CouplingRapidity(2.0)) == doctest::Approx(1.6198220928977023).epsilon(1e-14));
  CHECK(entropy(CouplingRapidity(-2.0)) == entropy(CouplingRapidity(2.0)));

  // printed form cosh^2 ln cosh^2 - sinh^2 ln sinh^2, for comparison
  auto printed = [](double eta) {
    const double c = std::cosh(eta / 2) * std::cosh(eta / 2);
    const double s = std::sinh(eta / 2) * std::sinh(eta / 2);
    return c * std::log(c) - s * std::log(s);
  };
  double prev = -1.0;
  for (int i = 0; i <= 60; ++i) {
    const double eta = 0.1 * i;
    const CouplingRapidity e(eta);
    const double s = entropy(e);
    CHECK(std::abs(ReducedState(e).weight_entropy() - s) <= 1e-10);
    if (i > 0) {
      CHECK(s == doctest::Approx(printed(eta)).epsilon(1e-12));
      CHECK(s > prev);
      CHECK(s > 0.0);
    }
    prev = s;
  }
}

TEST_CASE("effective temperature") {
  const ThermalMap cold = effective_temperature(CouplingRapidity(0.0), 1.0);
  CHECK(cold.temperature == 0.0);
  CHECK(eta_from_temperature(cold).value == 0.0);

  CHECK(effective_temperature(CouplingRapidity(2.0), 1.0).temperature ==
        doctest::Approx(3.671860932510951).epsilon(1e-14));
  CHECK(effective_temperature(CouplingRapidity(1e-3), 1.0).temperature < 0.15);

  // T grows with eta and scales with omega
  CHECK(effective_temperature(CouplingRapidity(3.0), 1.0).temperature ==
        doctest::Approx(10.03446512485267).epsilon(1e-13));
  CHECK(effective_temperature(CouplingRapidity(3.0), 2.5).temperature ==
        doctest::Approx(2.5 * 10.03446512485267).epsilon(1e-13));
  CHECK(effective_temperature(CouplingRapidity(-1.0), 1.0).temperature ==
        effective_temperature(CouplingRapidity(1.0), 1.0).temperature);

  for (double eta : {0.5, 1.0, 3.0}) {
    const ThermalMap m = effective_temperature(CouplingRapidity(eta), 1.0);
    CHECK(m.boltzmann_factor() == doctest::Approx(std::tanh(eta / 2)).epsilon(1e-14));
    CHECK(std::abs(eta_from_temperature(m).value - eta) <= 1e-12);
  }

  CHECK_THROWS_AS(effective_temperature(CouplingRapidity(1.0), 0.0), DomainError);
  CHECK_THROWS_AS(eta_from_temperature(ThermalMap{1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(eta_from_temperature(ThermalMap{0.0, 1.0}), DomainError);
}

TEST_CASE("uncertainty product matches moment quadrature of the two-mode state") {
  CHECK(uncertainty_product(CouplingRapidity(0.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(uncertainty_product(CouplingRapidity(1.0)) == doctest::Approx(0.7715403174076219).epsilon(1e-13));

  for (double eta : {0.5, 1.0, 2.0}) {
    const CouplingRapidity e(eta);
    const double extent = 10.0 * std::exp(0.5 * eta);
    quad::Options inner;
    inner.abs_tol = 1e-13;
    inner.initial_panels = 400;
    quad::Options outer;
    outer.initial_panels = 32;
    const quad::Box box{-extent, extent, -extent, extent};
    // <x1^2> of |psi|^2
    const double x2 = quad::integrate_2d([&](double a, double b) {
                        const double psi = ground_state_amplitude(e, a, b);
                        return a * a * psi * psi;
                      }, box, inner, outer).value;
    // <p1^2> = int |d psi / d x1|^2; d/dx1 of the exponent is
    // -(e^eta y1 + e^-eta y2)/sqrt2
    const double p2 = quad::integrate_2d([&](double a, double b) {
                        const NormalCoords y = to_normal_coords(a, b);
                        const double g = (std::exp(eta) * y.y1 + std::exp(-eta) * y.y2) / std::sqrt(2.0);
                        const double psi = ground_state_amplitude(e, a, b);
                        return g * g * psi * psi;
                      }, box, inner, outer).value;
    CHECK(std::sqrt(x2 * p2) == doctest::Approx(uncertainty_product(e)).epsilon(1e-9));
    CHECK(uncertainty_product(e) == doctest::Approx(std::cosh(eta) / 2).epsilon(1e-12));
  }

  double prev = 0.0;
  for (double eta = 0.0; eta <= 5.0; eta += 0.25) {
    const double u = uncertainty_product(CouplingRapidity(eta));
    CHECK(u >= prev);
    prev = u;
  }
}
