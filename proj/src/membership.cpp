#include "tb/membership.hpp"

#include <algorithm>

namespace tb {

namespace {

CyclicInterval image_of_leaf(const PLCircleMap& f, const CyclicInterval& leaf, const Rational& slope) {
  return {f(leaf.lo), leaf.length * slope};
}

// Slope of f on a leaf known to contain no interior breakpoint.
Rational slope_on(const PLCircleMap& f, const CyclicInterval& leaf) {
  return f(leaf.lo).ccw_distance(f(leaf.hi())) / leaf.length;
}

bool has_interior_breakpoint(const PLCircleMap& f, const CyclicInterval& leaf) {
  if (f.is_rotation()) return false;
  for (const auto& [x, y] : f.breakpoints()) {
    Rational d = leaf.lo.ccw_distance(x);
    if (sgn(d) > 0 && d < leaf.length) return true;
  }
  return false;
}

}  // namespace

Element recognize(const PLCircleMap& f) {
  long m = 0;
  for (const Segment& s : f.segments()) {
    if (!power_of_two_exponent(s.slope()))
      throw Error(ErrorCode::SlopeNotPowerOfTwo, s.x.to_string(), "slope " + format_rational(s.slope()));
    m = std::max(m, dyadic_depth(s.intercept()));
  }
  if (!f.is_rotation()) {
    for (const auto& [x, y] : f.breakpoints()) {
      if (!x.is_triadic()) throw Error(ErrorCode::BreakpointNotArcEndpoint, x.to_string());
      if (!y.is_triadic()) throw Error(ErrorCode::BreakpointNotArcEndpoint, y.to_string());
      m = std::max({m, dyadic_depth(x.value()), dyadic_depth(y.value())});
    }
  }
  // Leaves shorter than this are past the bound at which images must already
  // be standard.
  const Rational floor_length = Rational(1, 3) / (Integer(1) << static_cast<mp_bitcnt_t>(m + 3));

  ArcDiagram domain = base_diagram();
  for (bool changed = true; changed;) {
    changed = false;
    auto spans = domain.leaf_spans();
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (!has_interior_breakpoint(f, spans[i])) continue;
      if (spans[i].length < floor_length)
        throw Error(ErrorCode::BreakpointNotArcEndpoint, spans[i].to_string(), "breakpoint not reached by refinement");
      domain = domain.expand_at(i);
      changed = true;
      break;
    }
  }

  std::vector<Arc> images;
  while (true) {
    images.clear();
    for (const Arc& a : domain.arcs()) {
      try {
        images.push_back(arc_check(f(a.lo()), f(a.hi())));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAnArc) throw;
        throw Error(ErrorCode::ArcNotPreserved, a.compact_string(), e.what());
      }
    }
    auto spans = domain.leaf_spans();
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < spans.size() && !bad; ++i) {
      if (!is_standard(image_of_leaf(f, spans[i], slope_on(f, spans[i])))) bad = i;
    }
    if (!bad) break;
    if (spans[*bad].length < floor_length) throw Error(ErrorCode::ImageNotStandard, spans[*bad].to_string());
    domain = domain.expand_at(*bad);
  }

  ArcDiagram range = minimal_diagram_containing(images);
  auto dom = domain.leaf_spans();
  auto ran = range.leaf_spans();
  if (ran.size() != dom.size())
    throw Error(ErrorCode::ImageNotStandard, dom.front().to_string(), "image leaves do not tile a diagram");
  const Angle start = f(dom.front().lo);
  auto it = std::find_if(ran.begin(), ran.end(), [&](const CyclicInterval& r) { return r.lo == start; });
  if (it == ran.end()) throw Error(ErrorCode::ImageNotStandard, dom.front().to_string());
  const std::size_t offset = static_cast<std::size_t>(it - ran.begin());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (image_of_leaf(f, dom[i], slope_on(f, dom[i])) != ran[(i + offset) % ran.size()])
      throw Error(ErrorCode::ImageNotStandard, dom[i].to_string(), "image is not a leaf of the range diagram");
  }
  return reduce(Element::make(std::move(domain), std::move(range), static_cast<long>(offset)));
}

bool t3_check(const PLCircleMap& f) {
  for (const Segment& s : f.segments()) {
    if (!power_of_two_exponent(s.slope())) return false;
  }
  for (const auto& [x, y] : f.breakpoints()) {
    if (!x.on_grid() || !y.on_grid()) return false;
  }
  return true;
}

bool roundtrip(const Element& f) { return equal(recognize(to_pl(f)), f); }

}  // namespace tb
