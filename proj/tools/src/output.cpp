#include "koiter/tools/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "koiter/errors.hpp"

namespace koiter::tools {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return {buffer.data(), result.ptr};
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), columns_(header.size()) {
  for (const auto& name : header) field(name);
  end_row();
}

void CsvWriter::separator() {
  if (written_ > 0) out_ << ',';
  ++written_;
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  out_ << format_double(value);
  return *this;
}

CsvWriter& CsvWriter::field(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::field(const std::string& value) {
  separator();
  out_ << value;
  return *this;
}

void CsvWriter::end_row() {
  require(written_ == columns_, "CSV row has the wrong number of fields");
  out_ << '\n';
  written_ = 0;
}

void write_vtk(std::ostream& out, const DisplacementField& field, const std::string& title) {
  const std::size_t count = field.size();
  out << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET STRUCTURED_GRID\n";
  out << "DIMENSIONS " << field.r.size() << ' ' << field.theta.size() << ' ' << field.z.size() << '\n';
  out << "POINTS " << count << " double\n";
  for (std::size_t k = 0; k < field.z.size(); ++k) {
    for (std::size_t j = 0; j < field.theta.size(); ++j) {
      for (std::size_t i = 0; i < field.r.size(); ++i) {
        out << format_double(field.r[i] * std::cos(field.theta[j])) << ' '
            << format_double(field.r[i] * std::sin(field.theta[j])) << ' ' << format_double(field.z[k]) << '\n';
      }
    }
  }
  out << "POINT_DATA " << count << '\n';
  auto scalars = [&](const char* name, const std::vector<double>& values) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (double v : values) out << format_double(v) << '\n';
  };
  scalars("phi_r", field.phi_r);
  scalars("phi_theta", field.phi_theta);
  scalars("phi_z", field.phi_z);
}

void write_field_csv(std::ostream& out, const DisplacementField& field) {
  CsvWriter csv(out, {"r", "theta", "z", "phi_r", "phi_theta", "phi_z"});
  for (std::size_t k = 0; k < field.z.size(); ++k) {
    for (std::size_t j = 0; j < field.theta.size(); ++j) {
      for (std::size_t i = 0; i < field.r.size(); ++i) {
        const std::size_t idx = field.index(i, j, k);
        csv.field(field.r[i]).field(field.theta[j]).field(field.z[k]);
        csv.field(field.phi_r[idx]).field(field.phi_theta[idx]).field(field.phi_z[idx]);
        csv.end_row();
      }
    }
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::InvalidArgument, "failed writing output file " + path.string());
}

}  // namespace koiter::tools
