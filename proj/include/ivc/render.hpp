#pragma once

#include <string>
#include <vector>

#include "ivc/interval_value.hpp"

namespace ivc {

struct RenderRow {
  std::string label;
  IntervalValue value;
};

/// One strip of 2^grid cells, '█' for covered and '·' for empty.
std::string render_cells(const IntervalValue& v, unsigned grid);

/// One line per row: "label  cells". Grid 0 means per-row max(bit height, 3).
std::string render_text(const std::vector<RenderRow>& rows, unsigned grid = 0);

/// Horizontal bar chart, one row per value, components as filled rectangles.
std::string render_svg(const std::vector<RenderRow>& rows, unsigned width = 640);

}  // namespace ivc
