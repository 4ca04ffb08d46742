#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace branchlab {

// Comment lines "# key: value" carry run metadata, then a header row and data rows.
// Fields never contain commas, so no quoting is needed.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

void writeCsv(std::ostream& out, const CsvTable& table);
CsvTable readCsv(std::istream& in);

// Shortest decimal form that round-trips; NaN becomes an empty field.
std::string formatNumber(double v);
double parseNumber(const std::string& s);

}  // namespace branchlab
