#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mcg::cli {

enum class Format { json, csv, text };

/// Rows of string cells plus a JSON form for each row.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
};

void render(const Table& table, Format format, std::ostream& out);

}  // namespace mcg::cli
