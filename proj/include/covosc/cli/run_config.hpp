#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "covosc/parton_observables.hpp"
#include "covosc/rapidity.hpp"
#include "json.hpp"

namespace covosc::cli {

/// Malformed flags or values; maps to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { EntropyScan, DensityGrid, Squeeze, Parton };
enum class OutputFormat { Csv, Json };

std::string_view command_name(Command c);

/// Closed range MIN:MAX:STEP. Points are min + i*step, never accumulated.
struct Range {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// Parses "MIN:MAX:STEP". Throws UsageError on malformed text, step <= 0 or
/// max < min.
Range parse_range(std::string_view text);

struct RunConfig {
  Command command = Command::EntropyScan;
  std::optional<double> eta;
  std::optional<Range> eta_range;
  std::vector<double> energies;
  double mass = kProtonMassGeV;
  std::optional<int> kmax;
  std::optional<Range> grid;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out_path;
  RapidityBridge bridge = RapidityBridge::Factor2;
  std::optional<double> tol_quad;
  std::optional<double> tol_series;
  int ellipse_points = 64;

  /// Throws UsageError when a field is out of range.
  void validate() const;

  /// Eta values the command iterates over: the range, the single value, or 0.
  std::vector<double> etas() const;

  /// Config echo for the provenance header; excludes the output path.
  nlohmann::json to_json() const;
};

}  // namespace covosc::cli
