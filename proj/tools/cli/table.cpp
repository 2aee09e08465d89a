#include "cli/table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace logimap::cli {

void Table::add_column(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows())
    throw std::logic_error("Table: column '" + name + "' has wrong length");
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return columns[i];
  throw std::out_of_range("Table: no column '" + name + "'");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.names.size(); ++c)
    out << (c ? "," : "") << table.names[c];
  out << "\r\n";
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << format_double(table.columns[c][i]);
    out << "\r\n";
  }
  for (const auto& [label, values] : table.footer) {
    out << label;
    for (double v : values) out << ',' << format_double(v);
    // Pad to the header width so every record has the same field count.
    for (std::size_t c = values.size() + 1; c < table.names.size(); ++c)
      out << ',';
    out << "\r\n";
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = table.meta;
  auto& columns = doc["columns"] = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < table.names.size(); ++c)
    columns[table.names[c]] = table.columns[c];
  auto& footer = doc["footer"] = nlohmann::ordered_json::object();
  for (const auto& [label, values] : table.footer) footer[label] = values;
  out << doc.dump(2) << '\n';
}

}  // namespace logimap::cli
