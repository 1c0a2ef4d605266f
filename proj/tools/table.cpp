//
// table.cpp
//

#include "table.hpp"

#include <cstdio>

namespace juggle::cli {

namespace {

std::string csv_field(const nlohmann::json& value)
{
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_csv_row(std::ostream& out, const std::vector<nlohmann::json>& row)
{
  for (size_t k = 0; k < row.size(); ++k) {
    if (k > 0) {
      out << ',';
    }
    out << csv_field(row[k]);
  }
  out << "\r\n";
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, const RunInfo& info)
{
  std::vector<nlohmann::json> header(table.columns.begin(), table.columns.end());
  write_csv_row(out, header);
  for (const auto& row : table.rows) {
    write_csv_row(out, row);
  }
  for (const auto& [key, value] : table.summary.items()) {
    out << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\r\n";
  }
  out << "# juggle " << info.version << " seed=" << info.seed
      << " config=" << info.config_hash << "\r\n";
}

void write_json(std::ostream& out, const Table& table, const RunInfo& info)
{
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (size_t k = 0; k < row.size() && k < table.columns.size(); ++k) {
      obj[table.columns[k]] = row[k];
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = table.summary;
  doc["meta"] = {{"version", info.version},
                 {"seed", info.seed},
                 {"config", info.config_hash}};
  out << doc.dump(2) << '\n';
}

std::string fnv1a_hex(const std::string& text)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace juggle::cli
