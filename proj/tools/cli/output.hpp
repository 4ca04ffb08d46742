#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace branchlab::cli {

enum class Format { Csv, Json };

// A result table. Cells are JSON scalars: numbers, strings, booleans or null (NaN).
struct Table {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  void add(std::vector<nlohmann::ordered_json> row);
};

// NaN and infinities become null.
nlohmann::ordered_json number(double v);

void write(std::ostream& out, const Table& t, Format f);

}  // namespace branchlab::cli
