#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace koiter::tools {

/// \brief Settings shared by all subcommands; loaded from JSON, then overridden by flags.
struct RunConfig {
  double nu = 0.3;
  double E = 1.0;
  std::vector<double> h;  ///< empty selects the subcommand's default list
  double L = 3.141592653589793;
  double margin = 3.0;
  int degree = 12;
  std::filesystem::path out = ".";
  unsigned jobs = 0;
  double alpha = 0.5;
  std::string format = "vtk";
  double tolerance = 0.02;
  double sharpness = 1.0;
};

/// \brief Flag values given on the command line; unset fields keep the file or default value.
struct ConfigOverrides {
  std::optional<double> nu, E, L, margin, alpha, tolerance, sharpness;
  std::optional<std::vector<double>> h;
  std::optional<int> degree;
  std::optional<std::string> out, format;
  std::optional<unsigned> jobs;
};

/// \brief Applies the keys of a JSON object to the config; throws InvalidArgument on unknown keys or bad types.
void merge_json(RunConfig& config, const std::string& json_text);

/// \brief Reads and merges a JSON config file.
void merge_file(RunConfig& config, const std::filesystem::path& path);

void apply_overrides(RunConfig& config, const ConfigOverrides& overrides);

/// \brief Fills an empty h-list with the given defaults and checks every invariant.
void finalize(RunConfig& config, const std::vector<double>& default_h);

}  // namespace koiter::tools
