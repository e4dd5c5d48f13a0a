#include "koiter/tools/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "koiter/errors.hpp"
#include "koiter/material.hpp"
#include "koiter/shell.hpp"

namespace koiter::tools {

void merge_json(RunConfig& config, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
  }
  require(doc.is_object(), "config must be a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "nu") config.nu = value.get<double>();
      else if (key == "E") config.E = value.get<double>();
      else if (key == "h") config.h = value.is_array() ? value.get<std::vector<double>>() : std::vector{value.get<double>()};
      else if (key == "L") config.L = value.get<double>();
      else if (key == "margin") config.margin = value.get<double>();
      else if (key == "degree") config.degree = value.get<int>();
      else if (key == "out") config.out = value.get<std::string>();
      else if (key == "jobs") config.jobs = value.get<unsigned>();
      else if (key == "alpha") config.alpha = value.get<double>();
      else if (key == "format") config.format = value.get<std::string>();
      else if (key == "tolerance") config.tolerance = value.get<double>();
      else if (key == "sharpness") config.sharpness = value.get<double>();
      else throw Error(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config value has the wrong type: ") + e.what());
  }
}

void merge_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  merge_json(config, buffer.str());
}

void apply_overrides(RunConfig& config, const ConfigOverrides& o) {
  if (o.nu) config.nu = *o.nu;
  if (o.E) config.E = *o.E;
  if (o.h) config.h = *o.h;
  if (o.L) config.L = *o.L;
  if (o.margin) config.margin = *o.margin;
  if (o.degree) config.degree = *o.degree;
  if (o.out) config.out = *o.out;
  if (o.jobs) config.jobs = *o.jobs;
  if (o.alpha) config.alpha = *o.alpha;
  if (o.format) config.format = *o.format;
  if (o.tolerance) config.tolerance = *o.tolerance;
  if (o.sharpness) config.sharpness = *o.sharpness;
}

void finalize(RunConfig& config, const std::vector<double>& default_h) {
  if (config.h.empty()) config.h = default_h;
  require(!config.h.empty(), "h-list must be nonempty");
  for (std::size_t i = 0; i < config.h.size(); ++i) {
    (void)ShellGeometry(config.h[i], config.L);
    require(i == 0 || config.h[i] < config.h[i - 1], "h-list must be strictly decreasing");
  }
  (void)IsotropicElasticity(config.E, config.nu);
  require(std::isfinite(config.margin) && config.margin >= 1.0, "margin must be >= 1");
  require(config.degree >= 4, "radial degree must be >= 4");
  require(config.format == "vtk" || config.format == "csv", "format must be 'vtk' or 'csv'");
  require(std::isfinite(config.tolerance) && config.tolerance >= 0.0, "tolerance must be nonnegative");
  require(std::isfinite(config.alpha) && config.alpha > 0.0 && config.alpha <= 1.0, "alpha must lie in (0, 1]");
  require(std::isfinite(config.sharpness) && config.sharpness > 0.0, "sharpness must be positive");
}

}  // namespace koiter::tools
