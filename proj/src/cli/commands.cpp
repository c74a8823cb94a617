#include "covosc/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <sstream>
#include <numbers>
#include <thread>
#include <tuple>

#include "covosc/covariant_squeeze.hpp"
#include "covosc/oscillator_core.hpp"
#include "covosc/parton_observables.hpp"
#include "covosc/reduced_state.hpp"
#include "covosc/version.hpp"

namespace covosc::cli {

namespace {

// Evaluates fn(i) for i in [0, n) on a few threads; results stay in index
// order. The exception from the lowest failing index is rethrown so error
// messages do not depend on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < n; i += workers) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

nlohmann::json make_header(const RunConfig& config) {
  return {{"tool", "covosc"}, {"version", kVersion}, {"config", config.to_json()}};
}

int truncation_for(const RunConfig& config, CouplingRapidity eta) {
  return config.kmax ? *config.kmax : default_truncation_order(eta);
}

// --tol-quad bounds both the absolute and the relative error target.
quad::Options quadrature_options(const RunConfig& config) {
  quad::Options opts;
  opts.abs_tol = config.tol_quad.value_or(kDefaultTolQuad);
  opts.rel_tol = std::min(opts.rel_tol, opts.abs_tol);
  return opts;
}

std::string describe(double eta, const char* what, double dev, double tol) {
  std::ostringstream msg;
  msg << what << " at eta=" << eta << ": deviation " << dev << " exceeds " << tol;
  return msg.str();
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

Table cmd_entropy_scan(const RunConfig& config) {
  const double tol = config.tol_series.value_or(kEntropyScanTolSeries);
  const std::vector<double> etas = config.etas();

  struct Row {
    double entropy, purity, temperature, entropy_dev, purity_dev;
  };
  const auto rows = parallel_map<Row>(etas.size(), [&](std::size_t i) {
    const CouplingRapidity eta(etas[i]);
    const int kmax = truncation_for(config, eta);
    const ReducedState state(eta, kmax);
    Row r{};
    r.entropy = entropy(eta);
    r.purity = purity(eta);
    r.temperature = effective_temperature(eta, 1.0).temperature;
    r.entropy_dev = std::abs(state.weight_entropy() - r.entropy);
    r.purity_dev = std::abs(purity_series(eta, kmax) - r.purity);
    return r;
  });

  Table table;
  table.header = make_header(config);
  table.columns = {"eta", "entropy", "purity", "temperature"};
  double max_entropy_dev = 0.0;
  double max_purity_dev = 0.0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const Row& r = rows[i];
    table.rows.push_back({etas[i], r.entropy, r.purity, r.temperature});
    max_entropy_dev = std::max(max_entropy_dev, r.entropy_dev);
    max_purity_dev = std::max(max_purity_dev, r.purity_dev);
    if (r.entropy_dev > tol) table.failures.push_back(describe(etas[i], "entropy weight sum", r.entropy_dev, tol));
    if (r.purity_dev > tol) table.failures.push_back(describe(etas[i], "purity series", r.purity_dev, tol));
  }
  table.footer["max_entropy_deviation"] = max_entropy_dev;
  table.footer["max_purity_deviation"] = max_purity_dev;
  table.footer["tol_series"] = tol;
  return table;
}

Table cmd_density_grid(const RunConfig& config) {
  const double tol = config.tol_series.value_or(kDensityGridTolSeries);
  const quad::Options qopts = quadrature_options(config);
  const std::vector<double> axis = config.grid.value_or(Range{-3.0, 3.0, 0.1}).values();

  Table table;
  table.header = make_header(config);
  table.columns = {"eta", "x", "xp", "series", "quadrature", "abs_diff"};
  double max_diff = 0.0;

  for (const double eta_value : config.etas()) {
    const CouplingRapidity eta(eta_value);
    const ReducedState state(eta, truncation_for(config, eta));
    struct Cellpair {
      double series, quadrature;
    };
    const auto blocks = parallel_map<std::vector<Cellpair>>(axis.size(), [&](std::size_t i) {
      std::vector<Cellpair> block;
      block.reserve(axis.size());
      for (const double xp : axis) {
        block.push_back({density_series(state, axis[i], xp),
                         density_quadrature(eta, axis[i], xp, qopts)});
      }
      return block;
    });
    double eta_max = 0.0;
    for (std::size_t i = 0; i < axis.size(); ++i) {
      for (std::size_t j = 0; j < axis.size(); ++j) {
        const auto& c = blocks[i][j];
        const double diff = std::abs(c.series - c.quadrature);
        eta_max = std::max(eta_max, diff);
        table.rows.push_back({eta_value, axis[i], axis[j], c.series, c.quadrature, diff});
      }
    }
    if (eta_max > tol) table.failures.push_back(describe(eta_value, "series vs quadrature", eta_max, tol));
    max_diff = std::max(max_diff, eta_max);
  }
  table.footer["max_abs_diff"] = max_diff;
  table.footer["tol_series"] = tol;
  table.footer["tol_quad"] = qopts.abs_tol;
  return table;
}

Table cmd_squeeze(const RunConfig& config) {
  const double tol = config.tol_series.value_or(kSqueezeTolSeries);
  const quad::Options qopts = quadrature_options(config);
  const Range grid = config.grid.value_or(Range{-4.0, 4.0, 0.1});
  const std::vector<double> axis = grid.values();

  Table table;
  table.header = make_header(config);
  table.columns = {"section", "eta", "longitudinal", "timelike", "value"};
  nlohmann::json per_eta = nlohmann::json::array();

  for (const double eta_value : config.etas()) {
    const BoostRapidity eta(eta_value);
    const WavefunctionParams space{eta, WaveSpace::SpaceTime};
    const WavefunctionParams momentum{eta, WaveSpace::MomentumEnergy};

    double grid_norm_space = 0.0;
    double grid_norm_momentum = 0.0;
    for (const auto& [name, params, norm] :
         {std::tuple{"spacetime", space, &grid_norm_space},
          std::tuple{"momentum", momentum, &grid_norm_momentum}}) {
      for (const double l : axis) {
        for (const double tl : axis) {
          const double psi = wavefunction(params, l, tl);
          *norm += psi * psi * grid.step * grid.step;
          table.rows.push_back({std::string(name), eta_value, l, tl, psi});
        }
      }
    }

    const int n = config.ellipse_points;
    const auto space_ellipse = ellipse_samples(eta, n);
    const auto momentum_ellipse = momentum_ellipse_samples(eta, n);
    for (int i = 0; i < n; ++i) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      const auto& p = space_ellipse[static_cast<std::size_t>(i)];
      table.rows.push_back({std::string("ellipse_spacetime"), eta_value, p.z, p.t, theta});
    }
    for (int i = 0; i < n; ++i) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      const auto& p = momentum_ellipse[static_cast<std::size_t>(i)];
      table.rows.push_back({std::string("ellipse_momentum"), eta_value, p.z, p.t, theta});
    }

    // Four independent 2-D quadratures; run them side by side.
    const auto quads = parallel_map<double>(4, [&](std::size_t k) {
      switch (k) {
        case 0: return squared_norm_by_quadrature(space, qopts);
        case 1: return squared_norm_by_quadrature(momentum, qopts);
        case 2: return marginal_width_by_quadrature(space, WidthAxis::Longitudinal, qopts);
        default: return marginal_width_by_quadrature(momentum, WidthAxis::Longitudinal, qopts);
      }
    });
    const double width = marginal_width(space, WidthAxis::Longitudinal);
    const SqueezeEllipse ellipse = axis_scales(eta);

    per_eta.push_back({{"eta", eta_value},
                       {"norm_quadrature_spacetime", quads[0]},
                       {"norm_quadrature_momentum", quads[1]},
                       {"norm_grid_spacetime", grid_norm_space},
                       {"norm_grid_momentum", grid_norm_momentum},
                       {"width_closed_form", width},
                       {"width_quadrature_spacetime", quads[2]},
                       {"width_quadrature_momentum", quads[3]},
                       {"ellipse_major", ellipse.major},
                       {"ellipse_minor", ellipse.minor}});

    const std::pair<const char*, double> checks[] = {
        {"space-time normalization", std::abs(quads[0] - 1.0)},
        {"momentum-energy normalization", std::abs(quads[1] - 1.0)},
        {"space-time width", std::abs(quads[2] - width)},
        {"momentum-energy width", std::abs(quads[3] - width)},
    };
    for (const auto& [what, dev] : checks) {
      if (dev > tol) table.failures.push_back(describe(eta_value, what, dev, tol));
    }
  }
  table.footer["per_eta"] = per_eta;
  table.footer["tol_series"] = tol;
  table.footer["tol_quad"] = qopts.abs_tol;
  return table;
}

Table cmd_parton(const RunConfig& config) {
  Table table;
  table.header = make_header(config);
  table.columns = {"input_kind", "input", "eta", "interaction_time_ratio", "boost_entropy"};

  auto add_row = [&](const char* kind, double input, BoostRapidity eta) {
    const double ratio = interaction_time_ratio(eta);
    const double minor = axis_scales(eta).minor;
    const double dev = std::abs(ratio - minor * minor) / std::max(ratio, 1e-300);
    if (dev > kPartonTol) {
      table.failures.push_back(describe(eta.value, "ratio vs contracted axis squared", dev, kPartonTol));
    }
    table.rows.push_back({std::string(kind), input, eta.value, ratio, boost_entropy(eta, config.bridge)});
  };

  if (config.energies.empty() || config.eta || config.eta_range) {
    for (const double eta : config.etas()) add_row("eta", eta, BoostRapidity(eta));
  }
  for (const double energy : config.energies) {
    add_row("energy_gev", energy, rapidity_from_energy(BeamSpec{energy, config.mass}));
  }
  table.footer["mass_gev"] = config.mass;
  table.footer["bridge"] = config.bridge == RapidityBridge::Factor2 ? "factor2" : "identity";
  return table;
}

Table run_command(const RunConfig& config) {
  config.validate();
  Table table;
  switch (config.command) {
    case Command::EntropyScan: table = cmd_entropy_scan(config); break;
    case Command::DensityGrid: table = cmd_density_grid(config); break;
    case Command::Squeeze: table = cmd_squeeze(config); break;
    case Command::Parton: table = cmd_parton(config); break;
  }
  table.footer["checks_passed"] = table.checks_passed();
  table.footer["failures"] = table.failures;
  return table;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return *d;
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  out << "# " << table.header.dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
  out << "# " << table.footer.dump() << '\n';
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::json doc;
  doc["provenance"] = table.header;
  doc["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["footer"] = table.footer;
  out << doc.dump(1) << '\n';
}

}  // namespace covosc::cli
