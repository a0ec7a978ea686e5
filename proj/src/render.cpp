#include "tb/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace tb {

namespace {

constexpr double kRadius = 100.0;
constexpr double kMargin = 20.0;
constexpr double kPanel = 2 * (kRadius + kMargin);

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

struct Point {
  double x;
  double y;
};

// Screen position of angle t on a circle of radius r centred at (cx, cy).
Point at(const Rational& t, double cx, double cy, double r = kRadius) {
  double theta = 2 * std::numbers::pi * t.get_d();
  return {cx + r * std::cos(theta), cy - r * std::sin(theta)};
}

void panel(std::string& out, const ArcDiagram& d, double cx, double cy, RenderStyle style,
           const CyclicInterval* marked) {
  out += "<circle class=\"boundary\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(kRadius) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const Arc& a : d.arcs()) {
    const Rational span = a.farside().length;
    const double half = std::numbers::pi * span.get_d();
    const double r = kRadius * std::tan(half);
    Point p = at(a.lo().value(), cx, cy);
    Point q = at(a.hi().value(), cx, cy);
    out += "<path class=\"arc\" d=\"M " + num(p.x) + " " + num(p.y) + " A " + num(r) + " " + num(r) + " 0 0 1 " +
           num(q.x) + " " + num(q.y) + "\" fill=\"none\" stroke=\"black\"/>\n";
    if (style == RenderStyle::Labelled) {
      Point m = at(a.lo().value() + span / 2, cx, cy, kRadius + 10);
      out += "<text x=\"" + num(m.x) + "\" y=\"" + num(m.y) + "\" font-size=\"6\" text-anchor=\"middle\">" +
             a.to_string() + "</text>\n";
    }
  }
  if (marked) {
    Point m = at(marked->lo.value() + marked->length / 2, cx, cy);
    out += "<circle class=\"dot\" cx=\"" + num(m.x) + "\" cy=\"" + num(m.y) + "\" r=\"3\" fill=\"black\"/>\n";
  }
}

std::string header(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

}  // namespace

std::string render_svg(const ArcDiagram& d, RenderStyle style) {
  std::string out = header(kPanel, kPanel);
  panel(out, d, kPanel / 2, kPanel / 2, style, nullptr);
  return out + "</svg>\n";
}

std::string render_svg(const Element& f, RenderStyle style) {
  auto dom = f.domain().leaf_spans();
  auto ran = f.range().leaf_spans();
  std::string out = header(2 * kPanel, kPanel);
  out += "<g class=\"domain\">\n";
  panel(out, f.domain(), kPanel / 2, kPanel / 2, style, &dom.front());
  out += "</g>\n<g class=\"range\">\n";
  panel(out, f.range(), 1.5 * kPanel, kPanel / 2, style, &ran[f.offset()]);
  return out + "</g>\n</svg>\n";
}

}  // namespace tb
