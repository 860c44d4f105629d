#include "gupspec/cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "gupspec/errors.hpp"

namespace gup::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (v == 0) return "0";  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s(buf);
  for (char& c : s)
    if (c == ',') c = '.';
  return s;
}

namespace {

std::string csv_cell(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_double(*d);
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return *d;
  if (auto i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string to_json_text(const Table& t, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema"] = "gup-spectra/1";
  j["command"] = cfg.command;
  j["config"] = to_json(cfg);
  if (!t.meta.empty()) j["meta"] = t.meta;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

void emit(const Table& t, const RunConfig& cfg, Format fallback) {
  std::string text = cfg.output_format(fallback) == Format::Json ? to_json_text(t, cfg) : to_csv(t);
  if (cfg.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + cfg.out + "'");
  f << text;
}

}  // namespace gup::cli
