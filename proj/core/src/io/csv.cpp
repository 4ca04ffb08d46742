#include "branchlab/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "branchlab/errors.hpp"

namespace branchlab {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw InvalidInput("no CSV column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  return parseNumber(rows.at(row).at(column(name)));
}

std::string formatNumber(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parseNumber(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec == std::errc::invalid_argument || res.ptr != s.data() + s.size())
    throw InvalidInput("not a number: '" + s + "'");
  return v;
}

void writeCsv(std::ostream& out, const CsvTable& t) {
  for (const auto& [k, v] : t.meta) out << "# " << k << ": " << v << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].find_first_of(",\n") != std::string::npos) throw InvalidInput("CSV cell contains a separator");
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) {
    if (r.size() != t.header.size()) throw InvalidInput("CSV row width differs from header");
    line(r);
  }
}

CsvTable readCsv(std::istream& in) {
  CsvTable t;
  std::string s;
  bool haveHeader = false;
  while (std::getline(in, s)) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (s.empty()) continue;
    if (s[0] == '#') {
      const auto colon = s.find(": ");
      if (colon == std::string::npos || colon < 2) throw InvalidInput("malformed CSV comment: " + s);
      t.meta.emplace_back(s.substr(2, colon - 2), s.substr(colon + 2));
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (s.back() == ',') cells.emplace_back();
    if (!haveHeader) {
      t.header = std::move(cells);
      haveHeader = true;
    } else {
      if (cells.size() != t.header.size()) throw InvalidInput("CSV row width differs from header");
      t.rows.push_back(std::move(cells));
    }
  }
  if (!haveHeader) throw InvalidInput("CSV has no header");
  return t;
}

}  // namespace branchlab
