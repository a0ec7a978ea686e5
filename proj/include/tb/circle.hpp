#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tb/error.hpp"

namespace tb {

using Integer = mpz_class;
using Rational = mpq_class;

// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);

// j when q == 2^j, otherwise nullopt.  q must be positive.
std::optional<long> power_of_two_exponent(const Rational& q);

// Exponent of 2 in the reduced denominator of q (0 for integers and odd
// denominators).
long dyadic_depth(const Rational& q);

bool is_dyadic(const Rational& q);

std::string format_rational(const Rational& q);

// A point of the circle R/Z with exact rational coordinate in [0, 1).
//
// Points produced by the kernel live on the grid k/(3*2^n); arithmetic on
// general piecewise-linear maps may leave it, which `on_grid` reports.
class Angle {
 public:
  Angle() = default;

  // Validated constructor: rejects denominators other than 2^a and 3*2^a.
  static Angle make(const Integer& numerator, const Integer& denominator);
  static Angle make(long numerator, long denominator) {
    return make(Integer(numerator), Integer(denominator));
  }

  // Reduces mod 1 without checking the grid.
  static Angle from_rational(const Rational& q) { return Angle(frac(q)); }

  // Accepts "p/q" or an integer.  With require_grid, off-grid values raise
  // UnsupportedDenominator.
  static Angle parse(std::string_view text, bool require_grid = true);

  const Rational& value() const noexcept { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool on_grid() const;
  // True when the denominator carries the factor 3 (arc endpoints, exactly).
  bool is_triadic() const;

  std::string to_string() const { return format_rational(value_); }

  Angle operator+(const Rational& shift) const { return from_rational(value_ + shift); }
  Angle operator-(const Rational& shift) const { return from_rational(value_ - shift); }

  // Counterclockwise distance from this point to `to`, in [0, 1).
  Rational ccw_distance(const Angle& to) const { return frac(to.value_ - value_); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Angle(Rational canonical) : value_(std::move(canonical)) {}

  Rational value_{0};
};

// True iff b lies in the open counterclockwise interval from a to c.
bool cyclic_between(const Angle& a, const Angle& b, const Angle& c);

// A counterclockwise arc of the circle starting at `lo` with length in (0, 1).
struct CyclicInterval {
  Angle lo;
  Rational length;

  Angle hi() const { return lo + length; }
  bool contains_closed(const Angle& p) const { return lo.ccw_distance(p) <= length; }
  bool contains_interval(const CyclicInterval& other) const {
    return lo.ccw_distance(other.lo) + other.length <= length;
  }
  std::string to_string() const;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

// One affine piece of a PL circle map: [x, x + dx) maps onto [y, y + dy).
struct Segment {
  Angle x;
  Angle y;
  Rational dx;
  Rational dy;

  Rational slope() const { return dy / dx; }
  Rational intercept() const { return frac(y.value() - slope() * x.value()); }
};

// Orientation-preserving degree-one PL homeomorphism of the circle, stored as
// its breakpoint pairs.  Slopes are derived from consecutive breakpoints.
// Breakpoints are sorted by x and pruned of collinear points; a pure rotation
// keeps the single breakpoint 0 -> rotation(0).
class PLCircleMap {
 public:
  using Breakpoint = std::pair<Angle, Angle>;

  PLCircleMap() : breakpoints_{{Angle(), Angle()}} {}

  // Throws InvalidMap if the pairs do not describe an orientation-preserving
  // homeomorphism.
  static PLCircleMap from_breakpoints(std::vector<Breakpoint> points);
  static PLCircleMap rotation(const Angle& by);
  static PLCircleMap identity() { return {}; }

  // "x1:y1,x2:y2,..."
  static PLCircleMap parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  std::vector<Segment> segments() const;
  bool is_rotation() const;

  Angle operator()(const Angle& t) const;
  Angle preimage(const Angle& t) const;

  friend bool operator==(const PLCircleMap&, const PLCircleMap&) = default;

 private:
  explicit PLCircleMap(std::vector<Breakpoint> canonical) : breakpoints_(std::move(canonical)) {}

  std::vector<Breakpoint> breakpoints_;
};

Angle pl_eval(const PLCircleMap& f, const Angle& t);
// f after g.
PLCircleMap pl_compose(const PLCircleMap& f, const PLCircleMap& g);
PLCircleMap pl_inverse(const PLCircleMap& f);

}  // namespace tb
