#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace mlf::cli {

using Cell = std::variant<double, long long, std::string>;

enum class Format { csv, json };

/// Rows with named columns plus optional summary fields.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_real(*d);
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return *d;
  if (auto i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

/// CSV: a `# columns:` header, one line per row, then `# summary:` lines.
/// JSON: {"rows": [{column: value}], "summary": {...}}.
inline void emit(const Table& t, Format f, std::ostream& out) {
  if (f == Format::csv) {
    out << "# columns: ";
    for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_cell(r[i]);
      out << '\n';
    }
    for (const auto& [k, v] : t.summary) out << "# summary: " << k << '=' << format_cell(v) << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o;
    for (size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
    j["rows"].push_back(std::move(o));
  }
  if (!t.summary.empty()) {
    nlohmann::ordered_json s;
    for (const auto& [k, v] : t.summary) s[k] = cell_json(v);
    j["summary"] = std::move(s);
  }
  out << j.dump(2) << '\n';
}

}  // namespace mlf::cli
