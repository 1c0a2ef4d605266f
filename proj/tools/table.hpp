//
// table.hpp
//
// Tabular output for the command-line tool: CSV with a header row and a
// trailing metadata comment, or a single JSON document.
//

#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace juggle::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json summary = nlohmann::json::object();

  void add(std::vector<nlohmann::json> row) { rows.push_back(std::move(row)); }
};

struct RunInfo {
  std::string version;
  std::uint64_t seed = 0;
  std::string config_hash;
};

void write_csv(std::ostream& out, const Table& table, const RunInfo& info);
void write_json(std::ostream& out, const Table& table, const RunInfo& info);

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace juggle::cli
