#include "tb/lamination.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace tb {

namespace {

const Rational kHalf(1, 2);

std::string pair_string(const Angle& a, const Angle& b) {
  const Angle& x = std::min(a, b);
  const Angle& y = std::max(a, b);
  return "{" + x.to_string() + "," + y.to_string() + "}";
}

bool same_pair(const Arc& arc, const Angle& a, const Angle& b) {
  return (arc.lo() == a && arc.hi() == b) || (arc.lo() == b && arc.hi() == a);
}

struct Descent {
  std::optional<ArcLocation> location;
  std::string failure;
};

Descent descend(const Angle& a, const Angle& b) {
  if (same_pair(base_arc_upper(), a, b)) return {ArcLocation{1, {}, true}, {}};
  if (same_pair(base_arc_lower(), a, b)) return {ArcLocation{3, {}, true}, {}};
  if (a == b) return {std::nullopt, "endpoints coincide"};
  if (!a.is_triadic() || !b.is_triadic()) return {std::nullopt, "endpoint is not of the form k/(3*2^n)"};

  std::string failure = "no base interval contains both endpoints";
  for (const StandardInterval& start : base_intervals()) {
    if (!start.span.contains_closed(a) || !start.span.contains_closed(b)) continue;
    StandardInterval cur = start;
    while (true) {
      if (same_pair(primary_arc(cur), a, b)) return {ArcLocation{cur.base, cur.path, false}, {}};
      std::optional<StandardInterval> next;
      for (const StandardInterval& c : cur.subdivide()) {
        if (c.span.contains_closed(a) && c.span.contains_closed(b)) {
          next = c;
          break;
        }
      }
      if (!next) {
        failure = "pair straddles the subdivision of " + cur.span.to_string();
        break;
      }
      cur = std::move(*next);
    }
  }
  return {std::nullopt, failure};
}

}  // namespace

// ---------------------------------------------------------------------------

StandardInterval StandardInterval::child(Child c) const {
  const Rational quarter = span.length / 4;
  StandardInterval out{base, path, {}};
  out.path.push_back(c);
  switch (c) {
    case Child::Left: out.span = {span.lo, quarter}; break;
    case Child::Middle: out.span = {span.lo + quarter, 2 * quarter}; break;
    case Child::Right: out.span = {span.lo + 3 * quarter, quarter}; break;
  }
  return out;
}

std::array<StandardInterval, 3> StandardInterval::subdivide() const {
  return {child(Child::Left), child(Child::Middle), child(Child::Right)};
}

std::array<StandardInterval, 4> base_intervals() {
  return {StandardInterval{0, {}, {Angle::make(1, 6), Rational(1, 6)}},
          StandardInterval{1, {}, {Angle::make(1, 3), Rational(1, 3)}},
          StandardInterval{2, {}, {Angle::make(2, 3), Rational(1, 6)}},
          StandardInterval{3, {}, {Angle::make(5, 6), Rational(1, 3)}}};
}

std::array<StandardInterval, 3> subdivide(const StandardInterval& interval) {
  return interval.subdivide();
}

bool is_standard(const CyclicInterval& span) {
  for (const StandardInterval& start : base_intervals()) {
    if (!start.span.contains_interval(span)) continue;
    StandardInterval cur = start;
    while (true) {
      if (cur.span == span) return true;
      if (cur.length() <= span.length) break;
      std::optional<StandardInterval> next;
      for (const StandardInterval& c : cur.subdivide()) {
        if (c.span.contains_interval(span)) {
          next = c;
          break;
        }
      }
      if (!next) break;
      cur = std::move(*next);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

Arc base_arc_upper() { return Arc(Angle::make(1, 3), Angle::make(2, 3), 1); }
Arc base_arc_lower() { return Arc(Angle::make(5, 6), Angle::make(1, 6), 1); }

Arc primary_arc(const StandardInterval& interval) {
  const Rational quarter = interval.length() / 4;
  // Farside length is 2/(3*2^n).
  auto n = power_of_two_exponent(Rational(2) / (3 * 2 * quarter));
  return Arc(interval.lo() + quarter, interval.lo() + 3 * quarter, n.value());
}

Arc Arc::from_index(long level, const Integer& index) {
  if (level < 1) throw Error(ErrorCode::NotAnArc, "", "arc level must be at least 1");
  Integer den = Integer(3) << static_cast<mp_bitcnt_t>(level);
  Angle a = Angle::make(3 * index - 1, den);
  Angle b = Angle::make(3 * index + 1, den);
  return arc_check(a, b);
}

Arc Arc::parse(std::string_view text) {
  std::string s(text);
  auto open = s.find('{');
  auto close = s.rfind('}');
  auto comma = s.find(',');
  if (open == std::string::npos || close == std::string::npos || comma == std::string::npos ||
      !(open < comma && comma < close))
    throw Error(ErrorCode::Parse, s, "expected {p/q, r/s}");
  for (std::size_t i = close + 1; i < s.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(s[i]))) throw Error(ErrorCode::Parse, s, "trailing text");
  }
  Angle a = Angle::parse(s.substr(open + 1, comma - open - 1), false);
  Angle b = Angle::parse(s.substr(comma + 1, close - comma - 1), false);
  return arc_check(a, b);
}

Integer Arc::index() const {
  if (*this == base_arc_upper()) return 1;
  Integer den = Integer(3) << static_cast<mp_bitcnt_t>(level_);
  Rational scaled = lo_.value() * den;  // 3k - 1 (mod 3*2^n)
  Integer k = (scaled.get_num() + 1) / 3;
  Integer modulus = Integer(1) << static_cast<mp_bitcnt_t>(level_);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

CyclicInterval Arc::farside() const { return {lo_, lo_.ccw_distance(hi_)}; }

std::string Arc::to_string() const {
  const Angle& x = std::min(lo_, hi_);
  const Angle& y = std::max(lo_, hi_);
  return "{" + x.to_string() + ", " + y.to_string() + "}";
}

std::string Arc::compact_string() const { return pair_string(lo_, hi_); }

Arc arc_check(const Angle& a, const Angle& b) {
  Descent d = descend(a, b);
  if (!d.location) throw Error(ErrorCode::NotAnArc, pair_string(a, b), d.failure);
  const ArcLocation& where = *d.location;
  if (where.is_base_arc) return where.base == 1 ? base_arc_upper() : base_arc_lower();
  StandardInterval cur = base_intervals()[where.base];
  for (Child c : where.path) cur = cur.child(c);
  return primary_arc(cur);
}

ArcLocation locate(const Arc& arc) {
  Descent d = descend(arc.lo(), arc.hi());
  if (!d.location) throw Error(ErrorCode::Internal, arc.compact_string(), "stored arc fails descent");
  return *d.location;
}

Arc double_arc(const Arc& arc) {
  return arc_check(Angle::from_rational(2 * arc.lo().value()), Angle::from_rational(2 * arc.hi().value()));
}

CyclicInterval farside(const Arc& arc) { return arc.farside(); }

std::vector<Arc> ancestors(const Arc& arc) {
  ArcLocation where = locate(arc);
  std::vector<Arc> out;
  if (where.is_base_arc) return out;
  if (where.base == 1) out.push_back(base_arc_upper());
  if (where.base == 3) out.push_back(base_arc_lower());
  StandardInterval cur = base_intervals()[where.base];
  for (Child c : where.path) {
    if (c == Child::Middle) out.push_back(primary_arc(cur));
    cur = cur.child(c);
  }
  return out;
}

bool is_central(const Arc& arc) {
  ArcLocation where = locate(arc);
  if (where.is_base_arc) return true;
  if (where.base == 1 || where.base == 3) return false;
  return std::none_of(where.path.begin(), where.path.end(), [](Child c) { return c == Child::Middle; });
}

Angle central_label_of(const ArcLocation& where) {
  if (where.is_base_arc) return where.base == 1 ? Angle::make(1, 2) : Angle();
  if (where.base == 1 || where.base == 3)
    throw Error(ErrorCode::NotCentral, "", "arc lies behind a base arc");
  Rational lo = where.base == 0 ? Rational(0) : kHalf;
  Rational hi = where.base == 0 ? kHalf : Rational(1);
  for (Child c : where.path) {
    Rational mid = (lo + hi) / 2;
    if (c == Child::Middle) throw Error(ErrorCode::NotCentral, "", "arc lies behind a central arc");
    if (c == Child::Left) hi = mid;
    else lo = mid;
  }
  return Angle::from_rational((lo + hi) / 2);
}

Angle central_label(const Arc& arc) {
  try {
    return central_label_of(locate(arc));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCentral) throw Error(ErrorCode::NotCentral, arc.compact_string());
    throw;
  }
}

Arc arc_for_label(const Angle& label) {
  if (!is_dyadic(label.value())) throw Error(ErrorCode::NotCentral, label.to_string(), "label is not dyadic");
  const Rational& d = label.value();
  if (sgn(d) == 0) return base_arc_lower();
  if (d == kHalf) return base_arc_upper();
  StandardInterval cur = base_intervals()[d < kHalf ? 0 : 2];
  Rational lo = d < kHalf ? Rational(0) : kHalf;
  Rational hi = d < kHalf ? kHalf : Rational(1);
  while (true) {
    Rational mid = (lo + hi) / 2;
    if (d == mid) return primary_arc(cur);
    if (d < mid) {
      hi = mid;
      cur = cur.child(Child::Left);
    } else {
      lo = mid;
      cur = cur.child(Child::Right);
    }
  }
}

std::vector<Arc> enumerate_arcs(long max_level) {
  std::vector<Arc> out;
  if (max_level < 1) return out;
  out.push_back(base_arc_upper());
  out.push_back(base_arc_lower());
  std::function<void(const StandardInterval&)> visit = [&](const StandardInterval& interval) {
    Arc p = primary_arc(interval);
    if (p.level() > max_level) return;
    out.push_back(p);
    for (const StandardInterval& c : interval.subdivide()) visit(c);
  };
  for (const StandardInterval& b : base_intervals()) visit(b);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

GapId GapId::parse(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) throw Error(ErrorCode::Parse, "", "empty gap");
  s = s.substr(b);
  if (s.rfind("central", 0) == 0 && s.find_first_not_of(" \t\n", 7) == std::string::npos) return central();
  if (s.rfind("behind", 0) == 0) return behind_arc(Arc::parse(s.substr(6)));
  throw Error(ErrorCode::Parse, s, "expected 'central' or 'behind {p/q, r/s}'");
}

std::string GapId::to_string() const { return behind ? "behind " + behind->to_string() : "central"; }

long gap_depth(const GapId& gap) {
  if (gap.is_central()) return 0;
  return 1 + static_cast<long>(ancestors(*gap.behind).size());
}

int gap_color(const GapId& gap) { return static_cast<int>(gap_depth(gap) % 2); }

GapId neighbor_gap(const Arc& arc, Side side) {
  if (side == Side::Farside) return GapId::behind_arc(arc);
  auto up = ancestors(arc);
  if (up.empty()) return GapId::central();
  return GapId::behind_arc(up.back());
}

}  // namespace tb
