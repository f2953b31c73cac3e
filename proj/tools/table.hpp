#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cuspsum::cli {

enum class OutputFormat { Csv, Json, PlotData };

OutputFormat parse_output_format(std::string_view name);

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-oriented result of one command, rendered in any OutputFormat.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta;            // command, flags, version
  std::vector<std::string> comments;      // PlotData header lines

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string render(const Table& table, OutputFormat format);

/// %.{digits}g formatting, the same bytes on every run.
std::string format_number(double v, int digits);

}  // namespace cuspsum::cli
