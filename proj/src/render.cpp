#include "bruhat/wiring.hpp"

#include <sstream>

namespace bruhat {

namespace {

enum class Stroke { Solid, Dashed, Dotted, Labelled };

Stroke stroke_of(const Polynomial& w) {
  if (w == Polynomial(1)) return Stroke::Solid;
  if (w.size() == 1 && w.degree() == 1) {
    const Integer& c = w.leading_term().coefficient;
    if (c == -1) return Stroke::Dashed;
    if (c == 1) return Stroke::Dotted;
  }
  return Stroke::Labelled;
}

struct Segment {
  int column;  // layer index, edge runs from column to column+1
  int from;
  int to;
  const Polynomial* weight;
};

// An empty diagram is drawn as k straight wires of unit width.
std::vector<Segment> segments(const WiringDiagram& d, int& columns) {
  static const Polynomial one(1);
  std::vector<Segment> segs;
  if (d.layers().empty()) {
    columns = 1;
    for (int r = 1; r <= d.size(); ++r) segs.push_back(Segment{0, r, r, &one});
    return segs;
  }
  columns = static_cast<int>(d.layers().size());
  for (int c = 0; c < columns; ++c)
    for (const auto& e : d.layers()[c].edges()) segs.push_back(Segment{c, e.from, e.to, &e.weight});
  return segs;
}

std::string render_tikz(const WiringDiagram& d) {
  int columns = 0;
  const auto segs = segments(d, columns);
  const int k = d.size();
  const int top = k / 2;
  auto y = [top](int row) { return top - row + 1; };

  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  out << "\\foreach \\x in {0,...," << columns << "}{\n";
  out << "      \\foreach \\y in {" << y(k) << ",...," << y(1) << "}{\n";
  out << "        \\node[draw,circle,inner sep=0.5pt,fill] at (\\x,\\y) {}; } }\n";
  for (const auto& s : segs) {
    out << "\\draw ";
    switch (stroke_of(*s.weight)) {
      case Stroke::Dashed: out << "[dashed]"; break;
      case Stroke::Dotted: out << "[dotted]"; break;
      default: break;
    }
    out << "(" << s.column << "," << y(s.from) << ") -- (" << s.column + 1 << "," << y(s.to) << ")";
    if (stroke_of(*s.weight) == Stroke::Labelled)
      out << " node[midway,above] {$" << s.weight->to_string() << "$}";
    out << " ;\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_svg(const WiringDiagram& d) {
  constexpr int dx = 80, dy = 30, margin = 30;
  int columns = 0;
  const auto segs = segments(d, columns);
  const int k = d.size();
  const int width = 2 * margin + columns * dx;
  const int height = 2 * margin + (k - 1) * dy;
  auto px = [](int column) { return margin + column * dx; };
  auto py = [](int row) { return margin + (row - 1) * dy; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const auto& s : segs) {
    const Stroke st = stroke_of(*s.weight);
    out << "    <line x1=\"" << px(s.column) << "\" y1=\"" << py(s.from) << "\" x2=\""
        << px(s.column + 1) << "\" y2=\"" << py(s.to) << "\"";
    if (st == Stroke::Dashed) out << " stroke-dasharray=\"6,4\"";
    if (st == Stroke::Dotted) out << " stroke-dasharray=\"1.5,3\"";
    out << "><title>" << s.weight->to_string() << "</title></line>\n";
    if (st == Stroke::Labelled)
      out << "    <text x=\"" << (px(s.column) + px(s.column + 1)) / 2 << "\" y=\""
          << (py(s.from) + py(s.to)) / 2 - 4 << "\" font-size=\"10\" fill=\"black\" stroke=\"none\">"
          << s.weight->to_string() << "</text>\n";
  }
  out << "  </g>\n  <g fill=\"black\">\n";
  for (int c = 0; c <= columns; ++c)
    for (int r = 1; r <= k; ++r)
      out << "    <circle cx=\"" << px(c) << "\" cy=\"" << py(r) << "\" r=\"2.5\"/>\n";
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace

RenderFormat parse_render_format(const std::string& s) {
  if (s == "svg" || s == "SVG") return RenderFormat::SVG;
  if (s == "tikz" || s == "TIKZ") return RenderFormat::TIKZ;
  throw std::invalid_argument("unknown render format \"" + s + "\" (expected svg or tikz)");
}

std::string render(const WiringDiagram& d, RenderFormat format) {
  return format == RenderFormat::SVG ? render_svg(d) : render_tikz(d);
}

}  // namespace bruhat
