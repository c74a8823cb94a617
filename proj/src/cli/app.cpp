#include "covosc/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "covosc/cli/commands.hpp"
#include "covosc/errors.hpp"

namespace covosc::cli {

namespace {

struct RawFlags {
  std::string eta_range;
  std::string grid;
  std::string format = "csv";
  std::string bridge = "factor2";
  double eta = 0.0;
  int kmax = 0;
  double tol_quad = 0.0;
  double tol_series = 0.0;
  std::string out;
};

void add_flags(CLI::App& sub, RunConfig& cfg, RawFlags& raw) {
  sub.add_option("--eta", raw.eta, "Single rapidity value");
  sub.add_option("--eta-range", raw.eta_range, "Rapidity scan MIN:MAX:STEP");
  sub.add_option("--kmax", raw.kmax, "Series truncation order (default: chosen from eta)");
  sub.add_option("--grid", raw.grid, "Grid per axis MIN:MAX:STEP");
  sub.add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--out", raw.out, "Output path");
  sub.add_option("--bridge", raw.bridge, "Boost-to-coupling rapidity bridge")
      ->check(CLI::IsMember({"factor2", "identity"}));
  sub.add_option("--tol-quad", raw.tol_quad, "Absolute tolerance of adaptive quadrature");
  sub.add_option("--tol-series", raw.tol_series, "Tolerance of series cross-checks");
  sub.add_option("--ellipse-points", cfg.ellipse_points, "Samples per squeeze contour");
  if (cfg.command == Command::Parton) {
    sub.add_option("--energy", cfg.energies, "Beam energy in GeV (repeatable)");
    sub.add_option("--mass", cfg.mass, "Particle mass in GeV");
  }
}

RunConfig finish(const CLI::App& sub, RunConfig cfg, const RawFlags& raw) {
  if (sub.count("--eta")) cfg.eta = raw.eta;
  if (sub.count("--eta-range")) cfg.eta_range = parse_range(raw.eta_range);
  if (sub.count("--kmax")) cfg.kmax = raw.kmax;
  if (sub.count("--grid")) cfg.grid = parse_range(raw.grid);
  cfg.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.bridge = raw.bridge == "identity" ? RapidityBridge::Identity : RapidityBridge::Factor2;
  if (sub.count("--tol-quad")) cfg.tol_quad = raw.tol_quad;
  if (sub.count("--tol-series")) cfg.tol_series = raw.tol_series;
  if (sub.count("--out")) cfg.out_path = raw.out;
  cfg.validate();
  return cfg;
}

std::string render(const Table& table, OutputFormat format) {
  std::ostringstream buf;
  if (format == OutputFormat::Json) {
    write_json(table, buf);
  } else {
    write_csv(table, buf);
  }
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covariant oscillator decoherence toolkit", "covosc"};
  app.require_subcommand(1);

  struct Entry {
    Command command;
    const char* help;
    RunConfig cfg;
    RawFlags raw;
    CLI::App* sub = nullptr;
  };
  std::vector<Entry> entries;
  entries.reserve(4);
  entries.push_back({Command::EntropyScan, "Entropy, purity and temperature over eta", {}, {}});
  entries.push_back({Command::DensityGrid, "Reduced density matrix: series vs quadrature", {}, {}});
  entries.push_back({Command::Squeeze, "Squeezed wave functions and contours", {}, {}});
  entries.push_back({Command::Parton, "Interaction-time ratio and boost entropy", {}, {}});
  for (auto& e : entries) {
    e.cfg.command = e.command;
    e.sub = app.add_subcommand(std::string(command_name(e.command)), e.help);
    add_flags(*e.sub, e.cfg, e.raw);
  }

  RunConfig config;
  try {
    // CLI11 wants argv order reversed when handed a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto& e : entries) {
      if (e.sub->parsed()) config = finish(*e.sub, e.cfg, e.raw);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Table table;
  try {
    table = run_command(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QuadratureError& e) {
    err << "quadrature error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const GridError& e) {
    err << "grid error: " << e.what() << '\n';
    return kExitTolerance;
  }

  const std::string text = render(table, config.format);
  std::optional<std::filesystem::path> path;
  if (config.out_path) {
    path = *config.out_path;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    path = std::filesystem::path(dir) /
           (std::string(command_name(config.command)) +
            (config.format == OutputFormat::Json ? ".json" : ".csv"));
  }
  if (path) {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (file) file << text;
    if (!file) {
      err << "i/o error: cannot write " << path->string() << '\n';
      return kExitIo;
    }
  } else {
    out << text;
  }

  if (!table.checks_passed()) {
    for (const auto& f : table.failures) err << "tolerance failure: " << f << '\n';
    return kExitTolerance;
  }
  return kExitOk;
}

}  // namespace covosc::cli
