#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wfr/core.hpp"

namespace wfr {

/// Shortest decimal text that parses back to the identical double.
std::string format_double(double value);

/// Points read from CSV. When the header's last column is named "label" that
/// column is split off as integer labels.
struct PointTable {
  Dataset points;
  std::optional<Labels> labels;
  std::vector<std::string> header;
};

/// Comma-separated, one point per row. A first row containing any non-numeric
/// cell is a header. Ragged rows and non-numeric cells after the header raise
/// InvalidArgument naming the line.
PointTable parse_points_csv(std::istream& in);
PointTable read_points_csv(const std::filesystem::path& path);

/// Writes a header (x0,x1,...[,label]) then one row per point.
void write_points_csv(std::ostream& out, const Dataset& points,
                      std::optional<std::span<const int>> labels = std::nullopt);
void write_points_csv(const std::filesystem::path& path, const Dataset& points,
                      std::optional<std::span<const int>> labels = std::nullopt);

/// Reads a label column: the column named "label" if the header has one,
/// otherwise the only column of a single-column file.
Labels parse_labels_csv(std::istream& in);
Labels read_labels_csv(const std::filesystem::path& path);

void write_labels_csv(std::ostream& out, std::span<const int> labels);
void write_labels_csv(const std::filesystem::path& path, std::span<const int> labels);

}  // namespace wfr
