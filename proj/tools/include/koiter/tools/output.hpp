#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "koiter/modes.hpp"

namespace koiter::tools {

/// \brief Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// \brief Minimal CSV writer with fixed float formatting.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(const std::string& value);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  std::size_t columns_;
  std::size_t written_ = 0;
};

/// \brief Legacy-VTK structured grid: Cartesian points plus the three cylindrical components as scalars.
void write_vtk(std::ostream& out, const DisplacementField& field, const std::string& title);

/// \brief Plain CSV with columns r, theta, z, phi_r, phi_theta, phi_z.
void write_field_csv(std::ostream& out, const DisplacementField& field);

/// \brief Writes `content` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace koiter::tools
