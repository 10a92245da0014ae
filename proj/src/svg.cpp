#include "nochka/svg.hpp"

#include <algorithm>
#include <sstream>

namespace nochka {

namespace {

constexpr std::int64_t kUnit = 60;    // pixels per lattice step
constexpr std::int64_t kMargin = 40;  // canvas margins

// Coordinates are handled in half lattice units so the midpoint W and the
// segment label anchors stay integral.
struct Canvas {
  std::int64_t ymax2;  // 2*(k+1)
  std::int64_t px(std::int64_t x2) const { return kMargin + x2 * (kUnit / 2); }
  std::int64_t py(std::int64_t y2) const { return kMargin + (ymax2 - y2) * (kUnit / 2); }
};

std::string fraction_label(const Rational& r) { return r.str(); }

}  // namespace

std::string render_diagram_svg(const NochkaDiagram& d) {
  const std::int64_t xmax = d.X.x, ymax = d.X.y;
  const Canvas cv{2 * ymax};
  const std::int64_t width = 2 * kMargin + xmax * kUnit;
  const std::int64_t height = 2 * kMargin + ymax * kUnit;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<style>text{font-family:monospace;font-size:12px;}</style>\n";

  // Axes with integer ticks.
  out << "<line x1=\"" << cv.px(0) << "\" y1=\"" << cv.py(0) << "\" x2=\"" << cv.px(2 * xmax)
      << "\" y2=\"" << cv.py(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << cv.px(0) << "\" y1=\"" << cv.py(0) << "\" x2=\"" << cv.px(0)
      << "\" y2=\"" << cv.py(2 * ymax) << "\" stroke=\"black\"/>\n";
  for (std::int64_t x = 0; x <= xmax; ++x) {
    out << "<line x1=\"" << cv.px(2 * x) << "\" y1=\"" << cv.py(0) << "\" x2=\"" << cv.px(2 * x)
        << "\" y2=\"" << cv.py(0) + 4 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << cv.px(2 * x) - 4 << "\" y=\"" << cv.py(0) + 18 << "\">" << x
        << "</text>\n";
  }
  for (std::int64_t y = 0; y <= ymax; ++y) {
    out << "<line x1=\"" << cv.px(0) - 4 << "\" y1=\"" << cv.py(2 * y) << "\" x2=\"" << cv.px(0)
        << "\" y2=\"" << cv.py(2 * y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << cv.px(0) - 20 << "\" y=\"" << cv.py(2 * y) + 4 << "\">" << y
        << "</text>\n";
  }
  out << "<text x=\"" << cv.px(2 * xmax) - 30 << "\" y=\"" << cv.py(0) + 32
      << "\">alpha</text>\n";
  out << "<text x=\"" << cv.px(0) - 32 << "\" y=\"" << cv.py(2 * ymax) - 10
      << "\">codim</text>\n";

  // Slope-1 line through (n, k), from its x-axis crossing to the top edge.
  const std::int64_t ell_x0 = 2 * static_cast<std::int64_t>(d.n - d.k);
  out << "<line x1=\"" << cv.px(ell_x0) << "\" y1=\"" << cv.py(0) << "\" x2=\""
      << cv.px(ell_x0 + 2 * ymax) << "\" y2=\"" << cv.py(2 * ymax)
      << "\" stroke=\"green\" stroke-dasharray=\"6,3\"/>\n";
  // Line OX.
  out << "<line x1=\"" << cv.px(0) << "\" y1=\"" << cv.py(0) << "\" x2=\"" << cv.px(2 * xmax)
      << "\" y2=\"" << cv.py(2 * ymax) << "\" stroke=\"gray\" stroke-dasharray=\"2,4\"/>\n";

  // Hull segments with slope labels.
  for (std::size_t j = 0; j + 1 < d.hull.size(); ++j) {
    const auto a = d.hull[j], b = d.hull[j + 1];
    out << "<line x1=\"" << cv.px(2 * a.x) << "\" y1=\"" << cv.py(2 * a.y) << "\" x2=\""
        << cv.px(2 * b.x) << "\" y2=\"" << cv.py(2 * b.y)
        << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << cv.px(a.x + b.x) + 6 << "\" y=\"" << cv.py(a.y + b.y) - 6
        << "\" fill=\"blue\">" << fraction_label(d.slopes[j]) << "</text>\n";
  }

  // Diagram points; hull vertices get a heavier mark.
  for (const auto& p : d.points) {
    const bool vertex = std::find(d.hull.begin(), d.hull.end(), p.p) != d.hull.end();
    out << "<circle cx=\"" << cv.px(2 * p.p.x) << "\" cy=\"" << cv.py(2 * p.p.y) << "\" r=\""
        << (vertex ? 5 : 4) << "\" fill=\"" << (vertex ? "blue" : "black") << "\"/>\n";
  }

  // W (midpoint of OX) and X.
  out << "<circle cx=\"" << cv.px(xmax) << "\" cy=\"" << cv.py(ymax)
      << "\" r=\"4\" fill=\"none\" stroke=\"gray\"/>\n";
  out << "<text x=\"" << cv.px(xmax) + 6 << "\" y=\"" << cv.py(ymax) - 6 << "\">W</text>\n";
  out << "<circle cx=\"" << cv.px(2 * xmax) << "\" cy=\"" << cv.py(2 * ymax)
      << "\" r=\"5\" fill=\"red\"/>\n";
  out << "<text x=\"" << cv.px(2 * xmax) + 6 << "\" y=\"" << cv.py(2 * ymax) + 12
      << "\">X</text>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace nochka
