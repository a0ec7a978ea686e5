#include "tb/element.hpp"

#include <map>
#include <set>

namespace tb {

namespace {

std::size_t mod(long v, std::size_t n) {
  long m = v % static_cast<long>(n);
  return static_cast<std::size_t>(m < 0 ? m + static_cast<long>(n) : m);
}

using EndpointPair = std::pair<Rational, Rational>;

EndpointPair ordered(const Angle& a, const Angle& b) {
  return a < b ? EndpointPair{a.value(), b.value()} : EndpointPair{b.value(), a.value()};
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Element Element::make(ArcDiagram domain, ArcDiagram range, long offset) {
  const std::size_t n = domain.leaf_count();
  if (range.leaf_count() != n)
    throw Error(ErrorCode::LeafCountMismatch,
                std::to_string(n) + "/" + std::to_string(range.leaf_count()));
  const std::size_t off = mod(offset, n);

  auto dom = domain.leaf_spans();
  auto ran = range.leaf_spans();
  std::map<Rational, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(dom[i].lo.value(), i);
  for (std::size_t i = 0; i < n; ++i) {
    if (!power_of_two_exponent(ran[(i + off) % n].length / dom[i].length))
      throw Error(ErrorCode::Internal, dom[i].to_string(), "leaf slope is not a power of two");
  }

  std::set<EndpointPair> range_arcs;
  for (const Arc& a : range.arcs()) range_arcs.insert(ordered(a.lo(), a.hi()));

  auto image = [&](const Angle& p) -> const Angle& { return ran[(position.at(p.value()) + off) % n].lo; };
  for (const Arc& a : domain.arcs()) {
    if (!range_arcs.count(ordered(image(a.lo()), image(a.hi()))))
      throw Error(ErrorCode::ArcMismatch, a.compact_string(), "image is not an arc of the range diagram");
  }
  return Element(std::move(domain), std::move(range), off);
}

Element Element::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorCode::Parse, s, "expected [domain ; range ; offset]");
  std::string body = s.substr(1, s.size() - 2);
  auto first = body.find(';');
  auto second = first == std::string::npos ? first : body.find(';', first + 1);
  if (second == std::string::npos || body.find(';', second + 1) != std::string::npos)
    throw Error(ErrorCode::Parse, s, "expected [domain ; range ; offset]");
  std::string off = trim(body.substr(second + 1));
  if (off.empty() || off.find_first_not_of("-0123456789") != std::string::npos ||
      off.find('-', 1) != std::string::npos || off.size() > 18)
    throw Error(ErrorCode::Parse, s, "offset must be an integer");
  return make(ArcDiagram::parse(body.substr(0, first)),
              ArcDiagram::parse(body.substr(first + 1, second - first - 1)), std::stol(off));
}

std::string Element::to_string() const {
  return "[" + domain_.to_string() + " ; " + range_.to_string() + " ; " + std::to_string(offset_) + "]";
}

Element Element::expand(std::size_t leaf) const {
  const std::size_t n = leaf_count();
  if (leaf >= n) throw Error(ErrorCode::IndexOutOfRange, std::to_string(leaf));
  const std::size_t partner = (leaf + offset_) % n;
  return Element(domain_.expand_at(leaf), range_.expand_at(partner),
                 mod(static_cast<long>(partner) - static_cast<long>(leaf), n + 2));
}

Angle Element::operator()(const Angle& t) const {
  auto dom = domain_.leaf_spans();
  auto ran = range_.leaf_spans();
  const std::size_t n = dom.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rational into = dom[i].lo.ccw_distance(t);
    if (into < dom[i].length) {
      const CyclicInterval& target = ran[(i + offset_) % n];
      return target.lo + into * target.length / dom[i].length;
    }
  }
  throw Error(ErrorCode::Internal, t.to_string(), "leaves do not cover the circle");
}

// ---------------------------------------------------------------------------

Element identity() { return Element(); }

Element generator(Generator g) {
  switch (g) {
    case Generator::Alpha: return Element::parse("[.,(.,.,.),.,. ; .,.,.,(.,.,.) ; 5]");
    case Generator::Beta: return Element::parse("[.,.,(.,.,.),. ; (.,.,.),.,.,. ; 0]");
    case Generator::Gamma: return Element::parse("[(.,.,(.,.,.)),.,.,. ; ((.,.,.),.,.),.,.,. ; 0]");
    case Generator::Delta: return Element::parse("[.,.,.,. ; .,.,.,. ; 2]");
  }
  throw Error(ErrorCode::Internal, "", "unknown generator");
}

Generator generator_from_letter(char letter) {
  switch (letter) {
    case 'a': return Generator::Alpha;
    case 'b': return Generator::Beta;
    case 'g': return Generator::Gamma;
    case 'd': return Generator::Delta;
  }
  throw Error(ErrorCode::Parse, std::string(1, letter), "unknown generator letter");
}

Element reduce(const Element& f) {
  ArcDiagram dom = f.domain();
  ArcDiagram ran = f.range();
  std::size_t off = f.offset();
  while (true) {
    const std::size_t n = dom.leaf_count();
    auto range_triples = ran.sibling_triples();
    std::set<std::size_t> targets(range_triples.begin(), range_triples.end());
    bool reduced = false;
    for (std::size_t i : dom.sibling_triples()) {
      std::size_t j = (i + off) % n;
      if (!targets.count(j)) continue;
      dom = dom.collapse_at(i);
      ran = ran.collapse_at(j);
      off = mod(static_cast<long>(j) - static_cast<long>(i), n - 2);
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  return Element::make(std::move(dom), std::move(ran), static_cast<long>(off));
}

Element compose(const Element& f, const Element& g) {
  const ArcDiagram target = common_refinement(g.range(), f.domain());
  Element first = g;
  while (auto j = first.range().first_leaf_refined_by(target)) {
    first = first.expand(mod(static_cast<long>(*j) - static_cast<long>(first.offset()), first.leaf_count()));
  }
  Element second = f;
  while (auto i = second.domain().first_leaf_refined_by(target)) second = second.expand(*i);
  return reduce(Element::make(first.domain(), second.range(),
                              static_cast<long>(first.offset() + second.offset())));
}

Element inverse(const Element& f) {
  const std::size_t n = f.leaf_count();
  return Element::make(f.range(), f.domain(), static_cast<long>((n - f.offset()) % n));
}

bool equal(const Element& f, const Element& g) { return reduce(f) == reduce(g); }

Element conjugate(const Element& x, const Element& y) { return compose(inverse(y), compose(x, y)); }

PLCircleMap to_pl(const Element& f) {
  auto dom = f.domain().leaf_spans();
  auto ran = f.range().leaf_spans();
  const std::size_t n = dom.size();
  std::vector<PLCircleMap::Breakpoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.emplace_back(dom[i].lo, ran[(i + f.offset()) % n].lo);
  return PLCircleMap::from_breakpoints(std::move(points));
}

Angle evaluate(const Element& f, const Angle& t) { return f(t); }

Arc image_of_arc(const Element& f, const Arc& arc) { return arc_check(f(arc.lo()), f(arc.hi())); }

GapId image_of_gap(const Element& f, const GapId& gap) {
  // The central gap lies on the near side of {1/3,2/3}.
  const Arc bounding = gap.behind ? *gap.behind : base_arc_upper();
  const Arc image = image_of_arc(f, bounding);
  const bool keeps_farside = f(bounding.lo()) == image.lo();
  const bool gap_on_farside = gap.behind.has_value();
  return neighbor_gap(image, keeps_farside == gap_on_farside ? Side::Farside : Side::Centerside);
}

bool is_in_stab_C(const Element& f) { return image_of_gap(f, GapId::central()).is_central(); }

bool is_in_rist_C(const Element& f) {
  Element r = reduce(f);
  return r.domain().strip_sections() == r.domain() && r.range().strip_sections() == r.range();
}

}  // namespace tb
