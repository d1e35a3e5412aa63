#pragma once

// Rendering of command results as JSON, CSV or Markdown.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace monosol::cli {

using Json = nlohmann::json;

enum class OutputFormat { JSON, CSV, MD };

/// A result document. When `columns` is non-empty the document's "rows" array is also the
/// tabular view; otherwise the top-level fields are listed as key/value pairs.
struct Report {
  Json doc = Json::object();
  std::vector<std::string> columns;
};

inline std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object())
      flatten(value, name, out);
    else if (!(value.is_array() && name == "rows"))
      out.emplace_back(name, cell_text(value));
  }
}

inline std::string render(const Report& r, OutputFormat format) {
  if (format == OutputFormat::JSON) return r.doc.dump(2) + "\n";
  std::ostringstream out;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  if (!r.columns.empty()) {
    header = r.columns;
    for (const auto& row : r.doc.at("rows")) {
      std::vector<std::string> cells;
      for (const auto& c : r.columns) cells.push_back(row.contains(c) ? cell_text(row.at(c)) : "");
      rows.push_back(std::move(cells));
    }
  } else {
    header = {"field", "value"};
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(r.doc, "", kv);
    for (auto& [k, v] : kv) rows.push_back({k, v});
  }
  if (format == OutputFormat::CSV) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_escape(header[i]);
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << "\n";
    }
  } else {
    out << "|";
    for (const auto& h : header) out << ' ' << md_escape(h) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : rows) {
      out << "|";
      for (const auto& c : row) out << ' ' << md_escape(c) << " |";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace monosol::cli
