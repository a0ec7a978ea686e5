#include "tb/circle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tb {

Rational frac(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

namespace {

std::optional<long> integer_log2(const Integer& v) {
  if (v <= 0) return std::nullopt;
  std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (mpz_scan1(v.get_mpz_t(), 0) != bits - 1) return std::nullopt;
  return static_cast<long>(bits - 1);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Integer parse_integer(const std::string& s, std::string_view whole) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw Error(ErrorCode::Parse, std::string(whole), "expected an integer");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(ErrorCode::Parse, std::string(whole), "expected an integer");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

bool grid_denominator(const Integer& den) {
  Integer d = den;
  if (mpz_divisible_ui_p(d.get_mpz_t(), 3)) d /= 3;
  return integer_log2(d).has_value();
}

}  // namespace

std::optional<long> power_of_two_exponent(const Rational& q) {
  if (sgn(q) <= 0) return std::nullopt;
  auto num = integer_log2(q.get_num());
  auto den = integer_log2(q.get_den());
  if (!num || !den) return std::nullopt;
  return *num - *den;
}

long dyadic_depth(const Rational& q) {
  if (q.get_den() == 1) return 0;
  return static_cast<long>(mpz_scan1(q.get_den_mpz_t(), 0));
}

bool is_dyadic(const Rational& q) { return integer_log2(q.get_den()).has_value(); }

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Angle Angle::make(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) <= 0)
    throw Error(ErrorCode::Parse, denominator.get_str(), "denominator must be positive");
  Rational q(numerator, denominator);
  q.canonicalize();
  if (!grid_denominator(q.get_den()))
    throw Error(ErrorCode::UnsupportedDenominator, format_rational(q),
                "denominator is not 2^a or 3*2^a");
  return Angle(frac(q));
}

Angle Angle::parse(std::string_view text, bool require_grid) {
  std::string s = trim(text);
  auto slash = s.find('/');
  Integer num, den(1);
  if (slash == std::string::npos) {
    num = parse_integer(s, text);
  } else {
    num = parse_integer(trim(s.substr(0, slash)), text);
    den = parse_integer(trim(s.substr(slash + 1)), text);
    if (sgn(den) <= 0) throw Error(ErrorCode::Parse, s, "denominator must be positive");
  }
  if (require_grid) return make(num, den);
  Rational q(num, den);
  q.canonicalize();
  return from_rational(q);
}

bool Angle::on_grid() const { return grid_denominator(value_.get_den()); }

bool Angle::is_triadic() const {
  return on_grid() && mpz_divisible_ui_p(value_.get_den_mpz_t(), 3);
}

bool cyclic_between(const Angle& a, const Angle& b, const Angle& c) {
  if (a == c) return false;
  Rational ab = a.ccw_distance(b);
  return sgn(ab) > 0 && ab < a.ccw_distance(c);
}

std::string CyclicInterval::to_string() const {
  return "[" + lo.to_string() + "," + hi().to_string() + "]";
}

// ---------------------------------------------------------------------------

PLCircleMap PLCircleMap::from_breakpoints(std::vector<Breakpoint> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidMap, "", "no breakpoints");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (points[i].first == points[i + 1].first)
      throw Error(ErrorCode::InvalidMap, points[i].first.to_string(), "x has two images");
  }

  std::vector<Rational> dx(n), dy(n);
  Rational total_dy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x0, y0] = points[i];
    const auto& [x1, y1] = points[(i + 1) % n];
    dx[i] = n == 1 ? Rational(1) : x0.ccw_distance(x1);
    dy[i] = n == 1 ? Rational(1) : y0.ccw_distance(y1);
    if (sgn(dy[i]) == 0)
      throw Error(ErrorCode::InvalidMap, x0.to_string(), "map is not injective");
    total_dy += dy[i];
  }
  if (total_dy != 1)
    throw Error(ErrorCode::InvalidMap, "", "breakpoint images are not in cyclic order");

  std::vector<Breakpoint> kept;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t prev = (i + n - 1) % n;
    if (dy[prev] / dx[prev] != dy[i] / dx[i]) kept.push_back(points[i]);
  }
  if (kept.empty()) {
    // Single affine piece of slope one: a rotation.
    const auto& [x0, y0] = points.front();
    return PLCircleMap({{Angle(), y0 - x0.value()}});
  }
  return PLCircleMap(std::move(kept));
}

PLCircleMap PLCircleMap::rotation(const Angle& by) { return PLCircleMap({{Angle(), by}}); }

std::vector<Segment> PLCircleMap::segments() const {
  const std::size_t n = breakpoints_.size();
  std::vector<Segment> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x0, y0] = breakpoints_[i];
    const auto& [x1, y1] = breakpoints_[(i + 1) % n];
    Rational dx = n == 1 ? Rational(1) : x0.ccw_distance(x1);
    Rational dy = n == 1 ? Rational(1) : y0.ccw_distance(y1);
    out.push_back({x0, y0, dx, dy});
  }
  return out;
}

bool PLCircleMap::is_rotation() const { return breakpoints_.size() == 1; }

Angle PLCircleMap::operator()(const Angle& t) const {
  // Last breakpoint with x <= t; if none, the wrapping piece (the last one).
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](const Angle& v, const Breakpoint& b) { return v < b.first; });
  std::size_t i = it == breakpoints_.begin() ? breakpoints_.size() - 1
                                             : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  Segment seg = segments()[i];
  return seg.y + seg.slope() * seg.x.ccw_distance(t);
}

Angle PLCircleMap::preimage(const Angle& t) const {
  for (const Segment& seg : segments()) {
    Rational off = seg.y.ccw_distance(t);
    if (off < seg.dy) return seg.x + off / seg.slope();
  }
  throw Error(ErrorCode::Internal, t.to_string(), "preimage not found");
}

PLCircleMap PLCircleMap::parse(std::string_view text) {
  std::vector<Breakpoint> points;
  std::string s(text);
  auto last = s.find_last_not_of(" \t\r\n");
  if (last != std::string::npos && s[last] == ',') throw Error(ErrorCode::Parse, s, "trailing comma");
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::Parse, item, "expected x:y breakpoint");
    points.emplace_back(Angle::parse(item.substr(0, colon), false),
                        Angle::parse(item.substr(colon + 1), false));
  }
  return from_breakpoints(std::move(points));
}

std::string PLCircleMap::to_string() const {
  std::string out;
  for (const auto& [x, y] : breakpoints_) {
    if (!out.empty()) out += ',';
    out += x.to_string() + ":" + y.to_string();
  }
  return out;
}

Angle pl_eval(const PLCircleMap& f, const Angle& t) { return f(t); }

PLCircleMap pl_compose(const PLCircleMap& f, const PLCircleMap& g) {
  std::vector<PLCircleMap::Breakpoint> points;
  for (const auto& [x, y] : g.breakpoints()) points.emplace_back(x, f(y));
  for (const auto& [x, y] : f.breakpoints()) points.emplace_back(g.preimage(x), y);
  return PLCircleMap::from_breakpoints(std::move(points));
}

PLCircleMap pl_inverse(const PLCircleMap& f) {
  std::vector<PLCircleMap::Breakpoint> points;
  for (const auto& [x, y] : f.breakpoints()) points.emplace_back(y, x);
  return PLCircleMap::from_breakpoints(std::move(points));
}

}  // namespace tb
