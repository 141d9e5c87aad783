#include "wfr/svg.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "wfr/csv.hpp"

namespace wfr {

namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

}  // namespace

void write_svg_scatter(std::ostream& out, const Dataset& points, std::span<const int> labels,
                       double width, double height) {
  if (labels.size() != points.size()) {
    throw InvalidArgument("plot has " + std::to_string(points.size()) + " points but " +
                          std::to_string(labels.size()) + " labels");
  }
  const auto coord = [&](std::size_t i, std::size_t axis) {
    return axis < points.dim() ? points[i][axis] : 0.0;
  };
  double min_x = coord(0, 0), max_x = min_x, min_y = coord(0, 1), max_y = min_y;
  for (std::size_t i = 1; i < points.size(); ++i) {
    min_x = std::min(min_x, coord(i, 0));
    max_x = std::max(max_x, coord(i, 0));
    min_y = std::min(min_y, coord(i, 1));
    max_y = std::max(max_y, coord(i, 1));
  }
  const double margin = 20.0;
  const double span_x = std::max(max_x - min_x, 1e-12);
  const double span_y = std::max(max_y - min_y, 1e-12);
  const double scale = std::min((width - 2 * margin) / span_x, (height - 2 * margin) / span_y);

  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << format_double(width)
      << R"(" height=")" << format_double(height) << R"(" viewBox="0 0 )" << format_double(width)
      << ' ' << format_double(height) << "\">\n";
  out << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = margin + (coord(i, 0) - min_x) * scale;
    const double y = height - margin - (coord(i, 1) - min_y) * scale;
    out << R"(<circle cx=")" << format_double(x) << R"(" cy=")" << format_double(y) << '"';
    if (labels[i] == kOutlier) {
      out << R"( r="3" fill="none" stroke="black" stroke-width="1" class="outlier"/>)";
    } else {
      out << R"( r="3" fill=")" << kPalette[static_cast<std::size_t>(labels[i]) % kPalette.size()]
          << R"(" class="c)" << labels[i] << R"("/>)";
    }
    out << '\n';
  }
  out << "</svg>\n";
}

}  // namespace wfr
