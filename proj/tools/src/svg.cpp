#include "gr/tools/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gr/error.hpp"

namespace gr::tools {

namespace {

constexpr int kCell = 32;
constexpr int kMargin = 16;

struct Frame {
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;

  int width() const { return (max_x - min_x + 1) * kCell + 2 * kMargin; }
  int height() const { return (max_y - min_y + 1) * kCell + 2 * kMargin; }
  // SVG y grows downward; lattice y grows upward.
  int left(const Coord& c) const { return kMargin + (c.x - min_x) * kCell; }
  int top(const Coord& c) const { return kMargin + (max_y - c.y) * kCell; }
};

Frame frame_of(const Graph& g) {
  if (g.family() != Family::GridWindow && g.family() != Family::Ladder)
    throw Error(Errc::WrongFamily, "render supports grid and ladder windows, got " + g.describe());
  constexpr int lo = std::numeric_limits<int>::min();
  constexpr int hi = std::numeric_limits<int>::max();
  Frame f{hi, lo, hi, lo};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Coord c = *g.coord(v);
    f.min_x = std::min(f.min_x, c.x);
    f.max_x = std::max(f.max_x, c.x);
    f.min_y = std::min(f.min_y, c.y);
    f.max_y = std::max(f.max_y, c.y);
  }
  return f;
}

void open_svg(std::ostream& out, const Frame& f) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\"" << f.height()
      << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height() << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << f.width() << "\" height=\"" << f.height() << "\" fill=\"#000000\"/>\n";
}

void draw_axes(std::ostream& out, const Frame& f) {
  const Coord origin{0, 0};
  const int ox = f.left(origin) + kCell / 2;
  const int oy = f.top(origin) + kCell / 2;
  out << "<g stroke=\"#808080\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << kMargin / 2 << "\" y1=\"" << oy << "\" x2=\"" << f.width() - kMargin / 2 << "\" y2=\"" << oy
      << "\"/>\n";
  out << "<line x1=\"" << ox << "\" y1=\"" << kMargin / 2 << "\" x2=\"" << ox << "\" y2=\"" << f.height() - kMargin / 2
      << "\"/>\n";
  out << "</g>\n";
}

std::string gray(int level) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
  return buf;
}

}  // namespace

std::string render_function_svg(const LatticeFunction& f) {
  const Graph& g = f.graph();
  const Frame frame = frame_of(g);
  std::ostringstream out;
  open_svg(out, frame);
  if (!f.is_zero()) {
    const Rational top = f.max();
    out << "<g stroke=\"none\">\n";
    for (VertexId v : f.support()) {
      const Coord c = *g.coord(v);
      const Rational scaled = f(v) * 255 / top;
      const int level = static_cast<int>(boost::multiprecision::numerator(scaled) /
                                         boost::multiprecision::denominator(scaled));
      out << "<rect x=\"" << frame.left(c) << "\" y=\"" << frame.top(c) << "\" width=\"" << kCell << "\" height=\""
          << kCell << "\" fill=\"" << gray(level) << "\"/>\n";
    }
    out << "</g>\n";
  }
  draw_axes(out, frame);
  out << "</svg>\n";
  return out.str();
}

std::string render_ordering_svg(const Ordering& o, std::size_t ranks) {
  const Graph& g = o.graph();
  const Frame frame = frame_of(g);
  ranks = std::min(ranks, o.size());
  std::ostringstream out;
  open_svg(out, frame);
  draw_axes(out, frame);
  out << "<g font-family=\"monospace\" font-size=\"12\" fill=\"#ffffff\" text-anchor=\"middle\">\n";
  for (std::size_t k = 1; k <= ranks; ++k) {
    const Coord c = *g.coord(o.vertex(k));
    out << "<text x=\"" << frame.left(c) + kCell / 2 << "\" y=\"" << frame.top(c) + kCell / 2 + 4 << "\">" << k
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace gr::tools
