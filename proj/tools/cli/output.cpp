#include "output.hpp"

#include <cmath>
#include <ostream>

#include "branchlab/errors.hpp"
#include "branchlab/io/csv.hpp"

namespace branchlab::cli {

void Table::add(std::vector<nlohmann::ordered_json> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width differs from the column list");
  rows.push_back(std::move(row));
}

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

namespace {

std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return formatNumber(v.get<double>());
  return v.dump();
}

}  // namespace

void write(std::ostream& out, const Table& t, Format f) {
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["meta"] = t.meta;
    j["columns"] = t.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json o = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
      rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }
  CsvTable c;
  for (const auto& [k, v] : t.meta.items()) c.meta.emplace_back(k, v.is_null() ? "null" : cell(v));
  c.header = t.columns;
  for (const auto& r : t.rows) {
    std::vector<std::string> cells;
    for (const auto& v : r) cells.push_back(cell(v));
    c.rows.push_back(std::move(cells));
  }
  writeCsv(out, c);
}

}  // namespace branchlab::cli
