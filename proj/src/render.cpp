#include "ivc/render.hpp"

#include <algorithm>
#include <sstream>

namespace ivc {

std::string render_cells(const IntervalValue& v, unsigned grid) {
  if (bit_height(v) > grid) throw ResolutionMismatch("value does not fit the render grid");
  std::string out;
  std::uint64_t cells = std::uint64_t{1} << grid;
  for (std::uint64_t l = 0; l < cells; ++l) {
    Dyadic mid = Dyadic::from_ratio(BigInt(2 * l + 1), grid + 1);
    out += membership(v, mid) ? "█" : "·";
  }
  return out;
}

std::string render_text(const std::vector<RenderRow>& rows, unsigned grid) {
  std::size_t label_width = 0;
  for (const auto& r : rows) label_width = std::max(label_width, r.label.size());
  std::ostringstream os;
  for (const auto& r : rows) {
    unsigned g = grid != 0 ? grid : std::max<unsigned>(static_cast<unsigned>(bit_height(r.value)), 3);
    os << r.label << std::string(label_width - r.label.size() + 2, ' ') << render_cells(r.value, g)
       << '\n';
  }
  return os.str();
}

std::string render_svg(const std::vector<RenderRow>& rows, unsigned width) {
  constexpr unsigned kRowHeight = 18;
  constexpr unsigned kBarHeight = 12;
  constexpr unsigned kLabelWidth = 110;
  unsigned height = kRowHeight * static_cast<unsigned>(rows.size()) + 8;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << (kLabelWidth + width + 8) << "\" height=\"" << height << "\">\n";
  unsigned y = 4;
  for (const auto& r : rows) {
    os << "  <text x=\"4\" y=\"" << (y + kBarHeight - 2) << "\" font-family=\"monospace\" "
       << "font-size=\"11\">" << r.label << "</text>\n";
    os << "  <rect x=\"" << kLabelWidth << "\" y=\"" << y << "\" width=\"" << width
       << "\" height=\"" << kBarHeight << "\" fill=\"#eeeeee\" stroke=\"#888888\"/>\n";
    for (const auto& c : r.value.components()) {
      std::uint64_t x0 = c.lo.scaled_floor(width);
      std::uint64_t x1 = c.hi.scaled_floor(width);
      if (x1 == x0) x1 = x0 + 1;
      os << "  <rect x=\"" << (kLabelWidth + x0) << "\" y=\"" << y << "\" width=\"" << (x1 - x0)
         << "\" height=\"" << kBarHeight << "\" fill=\"#3b6ea5\"/>\n";
    }
    y += kRowHeight;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ivc
