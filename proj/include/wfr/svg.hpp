#pragma once

#include <iosfwd>
#include <span>

#include "wfr/core.hpp"

namespace wfr {

/// Scatter plot of the first two coordinates (y = 0 for 1-D data), one <circle>
/// per point colored by label. Outliers are drawn as hollow black circles.
void write_svg_scatter(std::ostream& out, const Dataset& points, std::span<const int> labels,
                       double width = 640.0, double height = 640.0);

}  // namespace wfr
