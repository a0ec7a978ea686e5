#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "tb/circle.hpp"
#include "tb/diagram.hpp"
#include "tb/lamination.hpp"

namespace tb {

enum class Generator { Alpha, Beta, Gamma, Delta };

// An arc pair diagram: domain leaf i corresponds to range leaf
// (i + offset) mod leaf_count, and each domain leaf maps affinely onto its
// partner.  Instances built through `make` (or any kernel operation) are
// valid: every domain arc is carried onto a range arc.
class Element {
 public:
  // Identity on the base diagram.
  Element() = default;

  // Throws LeafCountMismatch or ArcMismatch.  Offsets are taken mod leaf count.
  static Element make(ArcDiagram domain, ArcDiagram range, long offset);

  // "[" diagram " ; " diagram " ; " offset "]"
  static Element parse(std::string_view text);
  std::string to_string() const;

  const ArcDiagram& domain() const noexcept { return domain_; }
  const ArcDiagram& range() const noexcept { return range_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t leaf_count() const { return domain_.leaf_count(); }
  // Arcs of domain and range together; the size measure used by reduction
  // arguments.
  std::size_t arc_count() const { return domain_.arc_count() + range_.arc_count(); }

  // Adds the primary arcs of domain leaf `leaf` and of its partner.
  Element expand(std::size_t leaf) const;

  Angle operator()(const Angle& t) const;

  // Structural equality of the stored diagrams; equal() compares elements.
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element(ArcDiagram domain, ArcDiagram range, std::size_t offset)
      : domain_(std::move(domain)), range_(std::move(range)), offset_(offset) {}

  ArcDiagram domain_;
  ArcDiagram range_;
  std::size_t offset_ = 0;
};

Element identity();
Element generator(Generator g);
Generator generator_from_letter(char letter);

Element reduce(const Element& f);
// f after g.
Element compose(const Element& f, const Element& g);
Element inverse(const Element& f);
bool equal(const Element& f, const Element& g);
// x^y = y^-1 . x . y
Element conjugate(const Element& x, const Element& y);

PLCircleMap to_pl(const Element& f);
Angle evaluate(const Element& f, const Angle& t);

Arc image_of_arc(const Element& f, const Arc& arc);
GapId image_of_gap(const Element& f, const GapId& gap);

bool is_in_stab_C(const Element& f);
bool is_in_rist_C(const Element& f);

}  // namespace tb
