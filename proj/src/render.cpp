#include "cbperm/render.hpp"

#include <algorithm>
#include <sstream>

#include "cbperm/errors.hpp"

namespace cbperm {

namespace {

std::string label(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string render_ascii(const LatticePath& path, int barrier) {
  const Point end = path.end();
  const int width = end.x;
  const int top = std::max(end.y, width + barrier);
  // Canvas cell (2x, 2y) holds lattice point (x, y); odd cells hold edges.
  const int cols = 2 * width + 1;
  const int rows = 2 * top + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  auto at = [&](int cx, int cy) -> char& { return canvas[rows - 1 - cy][cx]; };

  for (int y = 0; y <= top; ++y)
    for (int x = 0; x <= width; ++x) at(2 * x, 2 * y) = '.';
  for (int x = 0; x <= width; ++x) {
    const int y = x + barrier;
    if (y > top) break;
    at(2 * x, 2 * y) = '/';
    if (x < width && y + 1 <= top) at(2 * x + 1, 2 * y + 1) = '/';
  }
  const auto pts = path.points();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Point a = pts[k], b = pts[k + 1];
    at(a.x + b.x, a.y + b.y) = a.y == b.y ? '-' : '|';
  }
  for (const Point& p : pts) at(2 * p.x, 2 * p.y) = 'o';

  std::ostringstream out;
  const int margin = static_cast<int>(std::to_string(top).size());
  for (int r = 0; r < rows; ++r) {
    const int cy = rows - 1 - r;
    std::string lead(margin, ' ');
    if (cy % 2 == 0) {
      const std::string num = std::to_string(cy / 2);
      lead = std::string(margin - num.size(), ' ') + num;
    }
    std::string line = lead + " " + canvas[r];
    if (cy == 2 * end.y) line += "  " + label(end);
    if (cy == 2 * (width + barrier)) line += "  y=x+" + std::to_string(barrier);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << std::string(margin, ' ') << ' ' << label(path.origin) << '\n';
  return out.str();
}

std::string render_svg(const LatticePath& path, int barrier, int cell) {
  if (cell < 4) throw InvalidInput("cell size must be at least 4 pixels");
  const Point end = path.end();
  const int width = end.x;
  const int top = std::max(end.y, width + barrier);
  const int margin = 2 * cell;
  const int w_px = 2 * margin + width * cell + 2 * cell;
  const int h_px = 2 * margin + top * cell;
  auto px = [&](int x) { return margin + x * cell; };
  auto py = [&](int y) { return margin + (top - y) * cell; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_px << "\" height=\"" << h_px
      << "\" viewBox=\"0 0 " << w_px << ' ' << h_px << "\">\n";
  out << "  <g class=\"grid\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int x = 0; x <= width; ++x)
    out << "    <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
        << py(top) << "\"/>\n";
  for (int y = 0; y <= top; ++y)
    out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(width)
        << "\" y2=\"" << py(y) << "\"/>\n";
  out << "  </g>\n";
  out << "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1.5\">\n";
  out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(width) + cell / 2
      << "\" y2=\"" << py(0) << "\"/>\n";
  out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
      << py(top) - cell / 2 << "\"/>\n";
  out << "  </g>\n";
  const int bx_end = std::min(width, top - barrier);
  out << "  <line class=\"barrier\" x1=\"" << px(0) << "\" y1=\"" << py(barrier) << "\" x2=\""
      << px(bx_end) << "\" y2=\"" << py(bx_end + barrier)
      << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
  out << "  <text class=\"barrier-label\" x=\"" << px(bx_end) + 6 << "\" y=\""
      << py(bx_end + barrier) << "\" font-size=\"" << cell / 3 << "\">y=x+" << barrier
      << "</text>\n";

  const auto pts = path.points();
  out << "  <polyline class=\"path\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k)
    out << (k ? " " : "") << px(pts[k].x) << ',' << py(pts[k].y);
  out << "\"/>\n";
  out << "  <g class=\"vertices\" fill=\"black\">\n";
  for (const Point& p : pts)
    out << "    <circle class=\"vertex\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\""
        << std::max(2, cell / 10) << "\"/>\n";
  out << "  </g>\n";
  out << "  <text class=\"origin-label\" x=\"" << px(0) - cell << "\" y=\"" << py(0) + cell / 2
      << "\" font-size=\"" << cell / 3 << "\">" << label(path.origin) << "</text>\n";
  out << "  <text class=\"end-label\" x=\"" << px(end.x) + 6 << "\" y=\"" << py(end.y)
      << "\" font-size=\"" << cell / 3 << "\">" << label(end) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_path(const LatticePath& path, int barrier, const RenderSpec& spec) {
  if (barrier < 1) throw InvalidInput("barrier must be >= 1");
  if (!(path.origin == Point{})) throw InvalidInput("render expects a path starting at (0,0)");
  return spec.format == RenderFormat::Ascii ? render_ascii(path, barrier)
                                            : render_svg(path, barrier, spec.cell_size);
}

std::string render_codeword(const CodeWord& word, const RenderSpec& spec, bool allow_empty_path) {
  const int markers = word.marker_length();
  if (markers == 0) throw InvalidInput("the empty code word has no path to render");
  const auto tail = word.tail();
  if (tail.empty() && !allow_empty_path)
    throw InvalidInput("code word " + to_string(word) +
                       " has no integer tail; pass --allow-empty-path to render it anyway");
  return render_path(tail_to_path(tail, markers), markers, spec);
}

}  // namespace cbperm
