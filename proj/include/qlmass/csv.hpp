#pragma once

// Comma-separated dumps. The first line is "# config_hash: <hex>", then a
// header row, then data rows; floats carry 17 significant digits.

#include <cstddef>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace qlm {

using CsvCell = std::variant<double, std::size_t, std::string>;

std::string format_double(double x);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& config_hash,
            std::vector<std::string> columns);
  void row(const std::vector<CsvCell>& cells);
  void close();

 private:
  std::string path_;
  std::ofstream out_;
  std::size_t width_;
};

struct CsvTable {
  std::string config_hash;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Throws Errc::io when the column is absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, std::size_t col) const;
  std::size_t index(std::size_t row, std::size_t col) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace qlm
