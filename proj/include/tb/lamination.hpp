#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tb/circle.hpp"

namespace tb {

enum class Child : std::uint8_t { Left = 0, Middle = 1, Right = 2 };

// An interval reachable from one of the four base intervals by repeated 1:2:1
// subdivision.  `base` indexes the base interval ccw from [1/6,1/3].
struct StandardInterval {
  int base = 0;
  std::vector<Child> path;
  CyclicInterval span;

  const Angle& lo() const { return span.lo; }
  Angle hi() const { return span.hi(); }
  const Rational& length() const { return span.length; }

  std::array<StandardInterval, 3> subdivide() const;
  StandardInterval child(Child c) const;
};

std::array<StandardInterval, 4> base_intervals();
std::array<StandardInterval, 3> subdivide(const StandardInterval& interval);

// True when `span` is a standard interval (some subdivision descendant of a
// base interval).
bool is_standard(const CyclicInterval& span);

// A leaf of the Basilica lamination.  The arc is stored by its farside, the
// ccw interval from (3k-1)/(3*2^n) to (3k+1)/(3*2^n) that is separated from
// the central gap; {1/3,2/3} carries (n, k) = (1, 1).
class Arc {
 public:
  // Validates through arc_check.
  static Arc from_index(long level, const Integer& index);
  static Arc parse(std::string_view text);

  const Angle& lo() const noexcept { return lo_; }
  const Angle& hi() const noexcept { return hi_; }
  long level() const noexcept { return level_; }
  Integer index() const;
  CyclicInterval farside() const;

  bool has_endpoint(const Angle& p) const { return p == lo_ || p == hi_; }

  // "{a, b}" with endpoints ascending in [0, 1).
  std::string to_string() const;
  // Same without the space, for witnesses.
  std::string compact_string() const;

  friend bool operator==(const Arc& a, const Arc& b) { return a.lo_ == b.lo_; }
  friend std::strong_ordering operator<=>(const Arc& a, const Arc& b) { return a.lo_ <=> b.lo_; }

 private:
  friend Arc primary_arc(const StandardInterval&);
  friend Arc base_arc_upper();
  friend Arc base_arc_lower();
  Arc(Angle lo, Angle hi, long level) : lo_(std::move(lo)), hi_(std::move(hi)), level_(level) {}

  Angle lo_;
  Angle hi_;
  long level_ = 1;
};

// {1/3, 2/3} and {1/6, 5/6}.
Arc base_arc_upper();
Arc base_arc_lower();

Arc primary_arc(const StandardInterval& interval);

// Where an arc sits in the subdivision structure: either one of the two base
// arcs, or the primary arc of the standard interval reached by `path`.
struct ArcLocation {
  int base = 0;
  std::vector<Child> path;
  bool is_base_arc = false;
};

// Descent check of whether {a, b} is a lamination leaf.  Throws NotAnArc.
Arc arc_check(const Angle& a, const Angle& b);
ArcLocation locate(const Arc& arc);

Arc double_arc(const Arc& arc);
CyclicInterval farside(const Arc& arc);

// Arcs whose farside strictly contains this arc's farside, outermost first.
std::vector<Arc> ancestors(const Arc& arc);

bool is_central(const Arc& arc);
// Dyadic label in [0, 1) of a central arc.  Throws NotCentral.
Angle central_label(const Arc& arc);
Angle central_label_of(const ArcLocation& where);
// Inverse of central_label.  d must be dyadic.
Arc arc_for_label(const Angle& label);

// All arcs of level <= max_level, generated by subdivision, sorted.
std::vector<Arc> enumerate_arcs(long max_level);

// A gap of the lamination: the central gap, or the gap on the farside of an arc.
struct GapId {
  std::optional<Arc> behind;

  static GapId central() { return {}; }
  static GapId behind_arc(Arc arc) { return {std::move(arc)}; }
  bool is_central() const { return !behind.has_value(); }

  static GapId parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const GapId&, const GapId&) = default;
};

enum class Side { Farside, Centerside };

long gap_depth(const GapId& gap);
int gap_color(const GapId& gap);
GapId neighbor_gap(const Arc& arc, Side side);

}  // namespace tb
