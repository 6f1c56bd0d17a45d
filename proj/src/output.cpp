#include "chmhd/output.hpp"

#include <cstdio>
#include <stdexcept>

namespace chmhd {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : n_columns_(header.size()) {
  out_.open(path, std::ios::trunc);
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != n_columns_)
    throw std::invalid_argument("csv row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  out_.flush();
}

void write_vtk_snapshot(const std::filesystem::path& path, const Spaces& spaces,
                        const FieldState& state) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const Mesh& mesh = spaces.mesh;
  const int nv = mesh.n_vertices();
  const int ns = spaces.v2.n_scalar;

  out << "# vtk DataFile Version 3.0\n";
  out << "t=" << format_double(state.t) << "\n";
  out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << nv << " double\n";
  for (const auto& v : mesh.vertices)
    out << format_double(v.x()) << ' ' << format_double(v.y()) << " 0\n";
  out << "CELLS " << mesh.n_triangles() << ' ' << 4 * mesh.n_triangles() << "\n";
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
  out << "CELL_TYPES " << mesh.n_triangles() << "\n";
  for (int t = 0; t < mesh.n_triangles(); ++t) out << "5\n";

  out << "POINT_DATA " << nv << "\n";
  auto scalars = [&](const char* name, const Eigen::VectorXd& coeffs) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (int i = 0; i < nv; ++i) out << format_double(coeffs[i]) << "\n";
  };
  auto vectors = [&](const char* name, const Eigen::VectorXd& coeffs) {
    out << "VECTORS " << name << " double\n";
    for (int i = 0; i < nv; ++i)
      out << format_double(coeffs[i]) << ' ' << format_double(coeffs[ns + i]) << " 0\n";
  };
  scalars("phi", state.phi);
  scalars("mu", state.mu);
  scalars("p", state.p);
  vectors("u", state.u);
  vectors("B", state.B);
}

}  // namespace chmhd
