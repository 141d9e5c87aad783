#include "wfr/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace wfr {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

struct RawRow {
  std::size_t line = 0;
  std::vector<std::string> cells;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<RawRow> split_rows(std::istream& in) {
  std::vector<RawRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    RawRow row{line_no, {}};
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<double> parse_number(const std::string& cell) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last) return std::nullopt;
  return value;
}

bool is_numeric_row(const RawRow& row) {
  return std::all_of(row.cells.begin(), row.cells.end(),
                     [](const std::string& c) { return parse_number(c).has_value(); });
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidArgument("line " + std::to_string(line) + ": " + what);
}

int parse_label(const RawRow& row, const std::string& cell) {
  int value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    fail(row.line, "label '" + cell + "' is not an integer");
  }
  if (value < kOutlier) fail(row.line, "label " + cell + " is below -1");
  return value;
}

struct Table {
  std::vector<std::string> header;
  std::vector<RawRow> rows;
};

Table split_table(std::istream& in) {
  Table table;
  table.rows = split_rows(in);
  if (!table.rows.empty() && !is_numeric_row(table.rows.front())) {
    table.header = std::move(table.rows.front().cells);
    table.rows.erase(table.rows.begin());
  }
  if (table.rows.empty()) {
    throw InvalidArgument("CSV contains no data rows");
  }
  const std::size_t width = table.header.empty() ? table.rows.front().cells.size() : table.header.size();
  for (const auto& row : table.rows) {
    if (row.cells.size() != width) {
      fail(row.line, "expected " + std::to_string(width) + " cells, found " +
                         std::to_string(row.cells.size()));
    }
  }
  return table;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

PointTable parse_points_csv(std::istream& in) {
  Table table = split_table(in);
  const bool has_labels = !table.header.empty() && table.header.back() == "label";
  const std::size_t width = table.rows.front().cells.size();
  const std::size_t d = has_labels ? width - 1 : width;
  if (d == 0) {
    throw InvalidArgument("CSV has no feature columns");
  }

  std::vector<double> values;
  values.reserve(table.rows.size() * d);
  Labels labels;
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < d; ++c) {
      const auto v = parse_number(row.cells[c]);
      if (!v) fail(row.line, "cell " + std::to_string(c + 1) + " '" + row.cells[c] + "' is not numeric");
      if (!std::isfinite(*v)) fail(row.line, "cell " + std::to_string(c + 1) + " is not finite");
      values.push_back(*v);
    }
    if (has_labels) labels.push_back(parse_label(row, row.cells.back()));
  }

  PointTable out{Dataset(table.rows.size(), d, std::move(values)), std::nullopt, std::move(table.header)};
  if (has_labels) out.labels = std::move(labels);
  return out;
}

PointTable read_points_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_points_csv(in);
}

void write_points_csv(std::ostream& out, const Dataset& points,
                      std::optional<std::span<const int>> labels) {
  if (labels && labels->size() != points.size()) {
    throw InvalidArgument("label count does not match point count");
  }
  for (std::size_t c = 0; c < points.dim(); ++c) {
    out << (c ? "," : "") << 'x' << c;
  }
  out << (labels ? ",label\n" : "\n");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point row = points[i];
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_double(row[c]);
    }
    if (labels) out << ',' << (*labels)[i];
    out << '\n';
  }
}

void write_points_csv(const std::filesystem::path& path, const Dataset& points,
                      std::optional<std::span<const int>> labels) {
  auto out = open_out(path);
  write_points_csv(out, points, labels);
}

Labels parse_labels_csv(std::istream& in) {
  Table table = split_table(in);
  std::size_t column = 0;
  if (!table.header.empty()) {
    const auto it = std::find(table.header.rbegin(), table.header.rend(), "label");
    if (it != table.header.rend()) {
      column = static_cast<std::size_t>(table.header.rend() - it) - 1;
    } else if (table.header.size() != 1) {
      throw InvalidArgument("labels CSV has several columns but none named 'label'");
    }
  } else if (table.rows.front().cells.size() != 1) {
    throw InvalidArgument("labels CSV without a header must have exactly one column");
  }
  Labels labels;
  labels.reserve(table.rows.size());
  for (const auto& row : table.rows) labels.push_back(parse_label(row, row.cells[column]));
  return labels;
}

Labels read_labels_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_labels_csv(in);
}

void write_labels_csv(std::ostream& out, std::span<const int> labels) {
  out << "label\n";
  for (int l : labels) out << l << '\n';
}

void write_labels_csv(const std::filesystem::path& path, std::span<const int> labels) {
  auto out = open_out(path);
  write_labels_csv(out, labels);
}

}  // namespace wfr
