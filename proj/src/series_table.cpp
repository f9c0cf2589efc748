#include "hadamard/series_table.hpp"

#include <charconv>
#include <system_error>

#include "hadamard/errors.hpp"

namespace hadamard {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(std::string_view field) {
  while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw GridError("csv: cannot parse number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void SeriesTable::add_column(std::string name, std::vector<double> values) {
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& SeriesTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return columns[i];
  }
  throw GridError("table has no column '" + std::string(name) + "'");
}

std::size_t SeriesTable::rows() const {
  return columns.empty() ? 0 : columns.front().size();
}

void SeriesTable::validate() const {
  if (columns.empty() || names.size() != columns.size()) {
    throw GridError("table needs named columns");
  }
  const std::size_t n = rows();
  if (n == 0) throw GridError("table needs at least one row");
  for (const auto& c : columns) {
    if (c.size() != n) throw GridError("table columns differ in length");
  }
  const auto& t = columns.front();
  for (std::size_t i = 1; i < n; ++i) {
    if (!(t[i] > t[i - 1])) throw GridError("first column must be strictly increasing");
  }
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw GridError("csv: cannot format number");
  return std::string(buf, ptr);
}

std::string to_csv(const SeriesTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.names.size(); ++c) {
    if (c > 0) out += ',';
    out += table.names[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c > 0) out += ',';
      out += format_number(table.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

SeriesTable parse_csv(std::string_view text) {
  SeriesTable table;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (header) {
      for (auto f : fields) table.add_column(std::string(f), {});
      header = false;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw GridError("csv: ragged row");
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      table.columns[c].push_back(parse_number(fields[c]));
    }
  }
  if (header) throw GridError("csv: missing header row");
  return table;
}

}  // namespace hadamard
