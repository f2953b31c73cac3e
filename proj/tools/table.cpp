#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cuspsum::cli {

namespace {

constexpr int kTableDigits = 15;
constexpr int kPlotDigits = 12;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell, int digits) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d, digits);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    // Round through the 15-digit text so the serializer cannot emit more.
    return std::stod(format_number(*d, kTableDigits));
  }
  return std::get<std::string>(cell);
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "plotdata") return OutputFormat::PlotData;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string render(const Table& table, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::Csv: {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(table.columns[c]);
      }
      out += '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) out += ',';
          out += csv_escape(cell_text(row[c], kTableDigits));
        }
        out += '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json doc;
      doc["meta"] = table.meta;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      out = doc.dump(2);
      out += '\n';
      break;
    }
    case OutputFormat::PlotData: {
      for (const auto& line : table.comments) out += "# " + line + '\n';
      out += '#';
      for (const auto& col : table.columns) out += ' ' + col;
      out += '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) out += ' ';
          std::string text = cell_text(row[c], kPlotDigits);
          out += text.empty() ? "-" : text;
        }
        out += '\n';
      }
      break;
    }
  }
  return out;
}

}  // namespace cuspsum::cli
