#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tb/lamination.hpp"

namespace tb {

struct TernaryNode;
// nullptr is a leaf.  Nodes are immutable and shared between diagrams.
using TernaryTree = std::shared_ptr<const TernaryNode>;

struct TernaryNode {
  std::array<TernaryTree, 3> child;
  std::size_t leaves = 3;
};

std::size_t leaf_count(const TernaryTree& t);
TernaryTree make_node(TernaryTree left, TernaryTree middle, TernaryTree right);
bool same_tree(const TernaryTree& a, const TernaryTree& b);

// Leaf bordering the central gap between the central arcs labelled d1 < d2
// (d2 may be 1 for the wrap interval).
struct CentralAdjacent {
  Rational d1;
  Rational d2;
  friend bool operator==(const CentralAdjacent&, const CentralAdjacent&) = default;
};

// Leaf bordering the gap behind `arc`.
struct BehindArc {
  Arc arc;
  friend bool operator==(const BehindArc&, const BehindArc&) = default;
};

using LeafContext = std::variant<CentralAdjacent, BehindArc>;

struct Leaf {
  StandardInterval interval;
  LeafContext context;
};

// A finite arc set containing the two base arcs, stored as four ternary trees
// over the base intervals ccw from [1/6,1/3].  Each internal node is the
// 1:2:1 subdivision of its interval by the interval's primary arc.
//
// Leaves are indexed ccw starting at the leaf whose left endpoint is 1/6.
class ArcDiagram {
 public:
  using Forest = std::array<TernaryTree, 4>;

  ArcDiagram() = default;
  explicit ArcDiagram(Forest forest) : forest_(std::move(forest)) {}

  // Forest grammar: tree := "." | "(" tree "," tree "," tree ")";
  // diagram := tree "," tree "," tree "," tree.
  static ArcDiagram parse(std::string_view text);
  std::string to_string() const;

  const Forest& forest() const noexcept { return forest_; }
  std::size_t leaf_count() const;
  std::size_t arc_count() const { return leaf_count() / 2; }

  std::vector<Leaf> leaves() const;
  std::vector<CyclicInterval> leaf_spans() const;
  // Base arcs first, then the primary arcs of internal nodes in preorder.
  std::vector<Arc> arcs() const;

  ArcDiagram expand_at(std::size_t leaf) const;
  // Leaf indices i such that leaves i, i+1, i+2 are the children of one node.
  std::vector<std::size_t> sibling_triples() const;
  ArcDiagram collapse_at(std::size_t leaf) const;

  // Arc-set inclusion: every arc of `other` is an arc of this diagram.
  bool contains(const ArcDiagram& other) const;
  // First leaf of this diagram that is an internal node of `finer`.
  std::optional<std::size_t> first_leaf_refined_by(const ArcDiagram& finer) const;

  // Subdivides along the path to the node at (base, path), making every node
  // on it internal.
  ArcDiagram with_node(int base, const std::vector<Child>& path) const;

  // Central arcs of the diagram, ccw by label.
  std::vector<Arc> central_arcs() const;
  // Central arcs with at least one arc of the diagram behind them.
  std::vector<Arc> occupied_sections() const;
  // Removes every non-central arc except those behind `keep`.
  ArcDiagram strip_sections(const std::optional<Arc>& keep = std::nullopt) const;

  friend bool operator==(const ArcDiagram& a, const ArcDiagram& b);

 private:
  Forest forest_{};
};

ArcDiagram base_diagram();
ArcDiagram expand_at(const ArcDiagram& diagram, std::size_t leaf);
ArcDiagram minimal_diagram_containing(const std::vector<Arc>& arcs);
ArcDiagram common_refinement(const ArcDiagram& a, const ArcDiagram& b);

}  // namespace tb
