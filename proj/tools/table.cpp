#include "table.hpp"

#include <algorithm>

namespace mcg::cli {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
  out << '\n';
}

}  // namespace

void render(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["command"] = table.command;
      j["rows"] = table.json_rows;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      csv_line(table.columns, out);
      for (const auto& row : table.rows) csv_line(row, out);
      break;
    case Format::text: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      break;
    }
  }
}

}  // namespace mcg::cli
