#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hadamard {

/// Named numeric columns sharing a row count; the first column is t.
struct SeriesTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  /// Free-form provenance (kind, side, alpha, n, N, a, b, fn, L_n mode...).
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_column(std::string name, std::vector<double> values);
  [[nodiscard]] const std::vector<double>& column(std::string_view name) const;
  [[nodiscard]] std::size_t rows() const;

  /// Throws GridError unless all columns have equal length >= 1 and the
  /// first column is strictly increasing.
  void validate() const;

  bool operator==(const SeriesTable& other) const {
    return names == other.names && columns == other.columns;
  }
};

/// Locale-independent shortest-safe rendering with 17 significant digits.
[[nodiscard]] std::string format_number(double value);

/// Header row plus one line per row, comma separated, '\n' terminated.
[[nodiscard]] std::string to_csv(const SeriesTable& table);

/// Inverse of to_csv (metadata is not carried by CSV). Throws GridError on
/// ragged rows or unparsable numbers.
[[nodiscard]] SeriesTable parse_csv(std::string_view text);

}  // namespace hadamard
