#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "chmhd/scheme.hpp"

namespace chmhd {

// %.17g: round-trip exact for doubles, locale-independent
std::string format_double(double v);

// CSV with a mandatory header row; numeric cells must be preformatted with
// format_double for bit-identical reruns
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t n_columns_;
};

// Legacy VTK ASCII unstructured grid; P2 fields sampled at vertices only.
void write_vtk_snapshot(const std::filesystem::path& path, const Spaces& spaces,
                        const FieldState& state);

}  // namespace chmhd
