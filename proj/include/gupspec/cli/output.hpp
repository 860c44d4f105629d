#pragma once
#include <string>
#include <variant>
#include <vector>

#include "gupspec/cli/config.hpp"

namespace gup::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  void add(std::vector<Cell> row);
};

// %.15g with '.' as decimal separator
std::string format_double(double v);

std::string to_csv(const Table& t);
std::string to_json_text(const Table& t, const RunConfig& cfg);

// Writes to cfg.out, or stdout when empty.
void emit(const Table& t, const RunConfig& cfg, Format fallback = Format::Csv);

}  // namespace gup::cli
