#pragma once

// Globally adaptive Gauss-Kronrod integration on finite intervals.
//
// The 15-point Kronrod rule (with its embedded 7-point Gauss rule for the
// error estimate) comes from Boost.Math; this driver keeps every panel in a
// max-heap keyed on its error estimate and bisects the worst one until the
// summed error meets max(abs_tol, rel_tol * |I|). Integrands that are narrow
// compared with [a, b] need an initial split fine enough that no panel can
// step over the peak entirely.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <sstream>
#include <vector>

#include "covosc/errors.hpp"

namespace covosc::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  std::size_t initial_panels = 16;
  std::size_t max_panels = 200000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

namespace detail {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  friend bool operator<(const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; }
};

template <class F>
Panel evaluate_panel(F& f, double a, double b) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      [&f](double x) { return static_cast<double>(f(x)); }, a, b, 0, 0.0, &err);
  return Panel{a, b, v, err};
}

}  // namespace detail

/// Integrates f over [a, b]. Throws QuadratureError when the panel budget is
/// spent before the tolerance is met.
template <class F>
Result integrate(F&& f, double a, double b, const Options& opts = {}) {
  if (!(b > a)) {
    return Result{0.0, 0.0, 0};
  }
  const std::size_t n0 = std::max<std::size_t>(1, opts.initial_panels);
  std::vector<detail::Panel> storage;
  storage.reserve(std::max(n0, std::min<std::size_t>(opts.max_panels, 4096)));
  std::priority_queue<detail::Panel> heap(std::less<detail::Panel>{}, std::move(storage));

  double total = 0.0;
  double total_err = 0.0;
  const double width = (b - a) / static_cast<double>(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == n0) ? b : a + width * static_cast<double>(i + 1);
    detail::Panel p = detail::evaluate_panel(f, lo, hi);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (total_err > target()) {
    if (heap.size() >= opts.max_panels) {
      std::ostringstream msg;
      msg << "adaptive quadrature on [" << a << ", " << b << "] stopped at error " << total_err
          << " > requested " << target() << " after " << heap.size() << " panels";
      throw QuadratureError(msg.str(), total_err);
    }
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      std::ostringstream msg;
      msg << "adaptive quadrature on [" << a << ", " << b
          << "] cannot subdivide further; error " << total_err;
      throw QuadratureError(msg.str(), total_err);
    }
    const detail::Panel left = detail::evaluate_panel(f, worst.a, mid);
    const detail::Panel right = detail::evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels so the running update's cancellation does not leak
  // into the returned value.
  Result out;
  out.panels = heap.size();
  while (!heap.empty()) {
    out.value += heap.top().value;
    out.error += heap.top().error;
    heap.pop();
  }
  return out;
}

struct Box {
  double x_min;
  double x_max;
  double y_min;
  double y_max;
};

/// Nested 2-D integral of f(x, y) over a box: inner in x, outer in y.
/// The inner tolerance is tightened relative to the outer one so the outer
/// sum sees a smooth integrand.
template <class F>
Result integrate_2d(F&& f, const Box& box, const Options& inner, const Options& outer) {
  auto row = [&](double y) {
    return integrate([&](double x) { return f(x, y); }, box.x_min, box.x_max, inner).value;
  };
  return integrate(row, box.y_min, box.y_max, outer);
}

}  // namespace covosc::quad
