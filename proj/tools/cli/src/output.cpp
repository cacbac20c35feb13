#include <cstdio>
#include <string>

#include <json.hpp>

#include "darboux_cli/commands.hpp"

namespace darboux::cli {

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  out += buf;
}

}  // namespace

std::string format_csv(const Table& table) {
  std::string out = "p";
  for (const auto& [name, values] : table.columns) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t i = 0; i < table.p.size(); ++i) {
    append_number(out, table.p[i]);
    for (const auto& column : table.columns) {
      out += ',';
      append_number(out, column.second[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_json(const Table& table) {
  nlohmann::ordered_json columns = nlohmann::ordered_json::object();
  for (const auto& [name, values] : table.columns) columns[name] = values;
  nlohmann::ordered_json doc;
  doc["p"] = table.p;
  doc["columns"] = std::move(columns);
  return doc.dump(2) + "\n";
}

}  // namespace darboux::cli
