#pragma once

// Machine-readable output documents.
//
// JSON: one object {schema_version, command, parameters, columns, rows[, summary]}
// where each row is an object keyed by column name.
// CSV: UTF-8, header row from `columns`, LF line endings, no quoting needed
// because no emitted field contains a comma, quote or newline.

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsieve/errors.hpp"

namespace twinsieve {

inline constexpr std::string_view kSchemaVersion = "1.0";

using Json = nlohmann::ordered_json;

struct OutputRecord {
  std::string schema_version{kSchemaVersion};
  std::string command;
  Json parameters = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // scalar cells, one per column
  Json summary;                         // null when absent

  void add_row(std::vector<Json> row) {
    if (row.size() != columns.size()) throw DomainError("OutputRecord: row width does not match columns");
    rows.push_back(std::move(row));
  }

  Json to_json() const {
    Json doc = Json::object();
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["columns"] = columns;
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    doc["rows"] = std::move(arr);
    if (!summary.is_null()) doc["summary"] = summary;
    return doc;
  }

  static OutputRecord from_json(const Json& doc) {
    OutputRecord r;
    r.schema_version = doc.at("schema_version").get<std::string>();
    r.command = doc.at("command").get<std::string>();
    r.parameters = doc.at("parameters");
    r.columns = doc.at("columns").get<std::vector<std::string>>();
    for (const auto& obj : doc.at("rows")) {
      std::vector<Json> row;
      for (const auto& c : r.columns) row.push_back(obj.at(c));
      r.rows.push_back(std::move(row));
    }
    if (doc.contains("summary")) r.summary = doc.at("summary");
    return r;
  }

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Text form of a scalar cell as written to CSV. Null cells are empty.
inline std::string csv_cell(const Json& v) {
  if (v.is_null()) return {};
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void write_json(std::ostream& os, const OutputRecord& r) { os << r.to_json().dump(2) << '\n'; }

inline void write_csv(std::ostream& os, const OutputRecord& r) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      t.header = split_csv_line(line);
      first = false;
    } else {
      t.rows.push_back(split_csv_line(line));
    }
  }
  return t;
}

}  // namespace twinsieve
