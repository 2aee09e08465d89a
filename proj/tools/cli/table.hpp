#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace logimap::cli {

/// Column-oriented numeric output. CSV: header row, one row per index,
/// then one row per footer record. JSON: {"meta", "columns", "footer"}.
struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::vector<double>>> footer;

  void add_column(std::string name, std::vector<double> values);
  const std::vector<double>& column(const std::string& name) const;
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// 17 significant digits, '.' separator; round-trips through strtod.
std::string format_double(double v);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace logimap::cli
