#include "covosc/cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace covosc::cli {

std::string_view command_name(Command c) {
  switch (c) {
    case Command::EntropyScan: return "entropy-scan";
    case Command::DensityGrid: return "density-grid";
    case Command::Squeeze: return "squeeze";
    case Command::Parton: return "parton";
  }
  return "unknown";
}

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw UsageError("malformed range '" + std::string(whole) + "': expected MIN:MAX:STEP");
  }
  return value;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    throw UsageError("malformed range '" + std::string(text) + "': expected MIN:MAX:STEP");
  }
  Range r;
  r.min = parse_number(text.substr(0, c1), text);
  r.max = parse_number(text.substr(c1 + 1, c2 - c1 - 1), text);
  r.step = parse_number(text.substr(c2 + 1), text);
  if (!(r.step > 0.0)) throw UsageError("range '" + std::string(text) + "': STEP must be positive");
  if (r.max < r.min) throw UsageError("range '" + std::string(text) + "' is empty (MAX < MIN)");
  return r;
}

std::vector<double> Range::values() const {
  const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(min + step * static_cast<double>(i));
  return out;
}

void RunConfig::validate() const {
  if (eta && eta_range) throw UsageError("--eta and --eta-range are mutually exclusive");
  if (kmax && *kmax < 0) throw UsageError("--kmax must be non-negative");
  if (!(mass > 0.0)) throw UsageError("--mass must be positive");
  if (tol_quad && !(*tol_quad > 0.0)) throw UsageError("--tol-quad must be positive");
  if (tol_series && !(*tol_series > 0.0)) throw UsageError("--tol-series must be positive");
  if (ellipse_points < 8) throw UsageError("--ellipse-points must be at least 8");
  if (!energies.empty() && command != Command::Parton) {
    throw UsageError("--energy only applies to the parton command");
  }
}

std::vector<double> RunConfig::etas() const {
  if (eta_range) return eta_range->values();
  return {eta.value_or(0.0)};
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = std::string(command_name(command));
  j["etas"] = etas();
  if (eta_range) j["eta_range"] = {eta_range->min, eta_range->max, eta_range->step};
  if (!energies.empty()) j["energies_gev"] = energies;
  j["mass_gev"] = mass;
  j["kmax"] = kmax ? nlohmann::json(*kmax) : nlohmann::json("default");
  if (grid) j["grid"] = {grid->min, grid->max, grid->step};
  j["format"] = format == OutputFormat::Csv ? "csv" : "json";
  j["bridge"] = bridge == RapidityBridge::Factor2 ? "factor2" : "identity";
  if (tol_quad) j["tol_quad"] = *tol_quad;
  if (tol_series) j["tol_series"] = *tol_series;
  j["ellipse_points"] = ellipse_points;
  return j;
}

}  // namespace covosc::cli
