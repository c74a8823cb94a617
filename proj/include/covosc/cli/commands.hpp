#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "covosc/cli/run_config.hpp"
#include "json.hpp"

namespace covosc::cli {

using Cell = std::variant<double, std::string>;

/// Output of one command: a header echo, ordered rows, and a footer with the
/// cross-check summary.
struct Table {
  nlohmann::json header;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json footer = nlohmann::json::object();
  /// One message per internal cross-check that missed its tolerance.
  std::vector<std::string> failures;

  bool checks_passed() const { return failures.empty(); }
};

/// Per-command tolerance defaults used when the flags are absent.
inline constexpr double kDefaultTolQuad = 1e-10;
inline constexpr double kEntropyScanTolSeries = 1e-10;
inline constexpr double kDensityGridTolSeries = 1e-8;
inline constexpr double kSqueezeTolSeries = 1e-8;
inline constexpr double kPartonTol = 1e-12;

/// Rows (eta, entropy, purity, temperature at omega = 1).
Table cmd_entropy_scan(const RunConfig& config);
/// Rows (eta, x, x', series, quadrature, |diff|).
Table cmd_density_grid(const RunConfig& config);
/// Wave-function grids and 1-sigma contours in both pictures.
Table cmd_squeeze(const RunConfig& config);
/// Rows (input kind, input, eta, e^{-2 eta}, boost entropy).
Table cmd_parton(const RunConfig& config);

Table run_command(const RunConfig& config);

/// Shortest round-trip decimal text for a double.
std::string format_number(double v);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace covosc::cli
