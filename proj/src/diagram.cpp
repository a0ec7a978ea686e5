#include "tb/diagram.hpp"

#include <cctype>

namespace tb {

std::size_t leaf_count(const TernaryTree& t) { return t ? t->leaves : 1; }

TernaryTree make_node(TernaryTree left, TernaryTree middle, TernaryTree right) {
  auto node = std::make_shared<TernaryNode>();
  node->leaves = leaf_count(left) + leaf_count(middle) + leaf_count(right);
  node->child = {std::move(left), std::move(middle), std::move(right)};
  return node;
}

bool same_tree(const TernaryTree& a, const TernaryTree& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->leaves != b->leaves) return false;
  for (int i = 0; i < 3; ++i) {
    if (!same_tree(a->child[i], b->child[i])) return false;
  }
  return true;
}

namespace {

const Rational kHalf(1, 2);

LeafContext base_context(int base) {
  switch (base) {
    case 0: return CentralAdjacent{0, kHalf};
    case 1: return BehindArc{base_arc_upper()};
    case 2: return CentralAdjacent{kHalf, 1};
    default: return BehindArc{base_arc_lower()};
  }
}

std::array<LeafContext, 3> child_contexts(const LeafContext& ctx, const Arc& primary) {
  if (const auto* ca = std::get_if<CentralAdjacent>(&ctx)) {
    Rational mid = (ca->d1 + ca->d2) / 2;
    return {CentralAdjacent{ca->d1, mid}, BehindArc{primary}, CentralAdjacent{mid, ca->d2}};
  }
  const Arc& outer = std::get<BehindArc>(ctx).arc;
  return {BehindArc{outer}, BehindArc{primary}, BehindArc{outer}};
}

void collect_leaves(const TernaryTree& t, const StandardInterval& interval, const LeafContext& ctx,
                    std::vector<Leaf>& out) {
  if (!t) {
    out.push_back({interval, ctx});
    return;
  }
  auto kids = interval.subdivide();
  auto ctxs = child_contexts(ctx, primary_arc(interval));
  for (int i = 0; i < 3; ++i) collect_leaves(t->child[i], kids[i], ctxs[i], out);
}

void collect_spans(const TernaryTree& t, const CyclicInterval& span, std::vector<CyclicInterval>& out) {
  if (!t) {
    out.push_back(span);
    return;
  }
  const Rational q = span.length / 4;
  collect_spans(t->child[0], {span.lo, q}, out);
  collect_spans(t->child[1], {span.lo + q, 2 * q}, out);
  collect_spans(t->child[2], {span.lo + 3 * q, q}, out);
}

void collect_arcs(const TernaryTree& t, const StandardInterval& interval, std::vector<Arc>& out) {
  if (!t) return;
  out.push_back(primary_arc(interval));
  auto kids = interval.subdivide();
  for (int i = 0; i < 3; ++i) collect_arcs(t->child[i], kids[i], out);
}

// In-order walk of the left/right spine structure: central arcs by label.
void collect_central(const TernaryTree& t, const StandardInterval& interval, bool sections_only,
                     std::vector<Arc>& out) {
  if (!t) return;
  collect_central(t->child[0], interval.child(Child::Left), sections_only, out);
  if (!sections_only || t->child[1]) out.push_back(primary_arc(interval));
  collect_central(t->child[2], interval.child(Child::Right), sections_only, out);
}

TernaryTree strip_central(const TernaryTree& t, const StandardInterval& interval,
                          const std::optional<Arc>& keep) {
  if (!t) return nullptr;
  TernaryTree middle = (keep && *keep == primary_arc(interval)) ? t->child[1] : nullptr;
  return make_node(strip_central(t->child[0], interval.child(Child::Left), keep), std::move(middle),
                   strip_central(t->child[2], interval.child(Child::Right), keep));
}

TernaryTree expand_tree(const TernaryTree& t, std::size_t idx) {
  if (!t) return make_node(nullptr, nullptr, nullptr);
  std::array<TernaryTree, 3> kids = t->child;
  for (auto& k : kids) {
    std::size_t n = leaf_count(k);
    if (idx < n) {
      k = expand_tree(k, idx);
      break;
    }
    idx -= n;
  }
  return make_node(kids[0], kids[1], kids[2]);
}

bool is_bare(const TernaryTree& t) { return t && !t->child[0] && !t->child[1] && !t->child[2]; }

TernaryTree collapse_tree(const TernaryTree& t, std::size_t idx) {
  if (!t) throw Error(ErrorCode::IndexOutOfRange, std::to_string(idx), "no sibling triple at leaf");
  if (idx == 0 && is_bare(t)) return nullptr;
  std::array<TernaryTree, 3> kids = t->child;
  for (auto& k : kids) {
    std::size_t n = leaf_count(k);
    if (idx < n) {
      k = collapse_tree(k, idx);
      return make_node(kids[0], kids[1], kids[2]);
    }
    idx -= n;
  }
  throw Error(ErrorCode::IndexOutOfRange, std::to_string(idx), "no sibling triple at leaf");
}

void collect_triples(const TernaryTree& t, std::size_t offset, std::vector<std::size_t>& out) {
  if (!t) return;
  if (is_bare(t)) {
    out.push_back(offset);
    return;
  }
  for (const auto& k : t->child) {
    collect_triples(k, offset, out);
    offset += leaf_count(k);
  }
}

bool tree_contains(const TernaryTree& a, const TernaryTree& b) {
  if (!b) return true;
  if (!a) return false;
  for (int i = 0; i < 3; ++i) {
    if (!tree_contains(a->child[i], b->child[i])) return false;
  }
  return true;
}

TernaryTree tree_union(const TernaryTree& a, const TernaryTree& b) {
  if (!a) return b;
  if (!b) return a;
  return make_node(tree_union(a->child[0], b->child[0]), tree_union(a->child[1], b->child[1]),
                   tree_union(a->child[2], b->child[2]));
}

std::optional<std::size_t> first_refined(const TernaryTree& coarse, const TernaryTree& fine,
                                         std::size_t& counter) {
  if (!coarse) {
    if (fine) return counter;
    ++counter;
    return std::nullopt;
  }
  for (int i = 0; i < 3; ++i) {
    auto hit = first_refined(coarse->child[i], fine ? fine->child[i] : nullptr, counter);
    if (hit) return hit;
  }
  return std::nullopt;
}

TernaryTree ensure_path(const TernaryTree& t, const std::vector<Child>& path, std::size_t depth) {
  std::array<TernaryTree, 3> kids{};
  if (t) kids = t->child;
  if (depth < path.size()) {
    auto& k = kids[static_cast<int>(path[depth])];
    k = ensure_path(k, path, depth + 1);
  } else if (t) {
    return t;
  }
  return make_node(kids[0], kids[1], kids[2]);
}

void format_tree(const TernaryTree& t, std::string& out) {
  if (!t) {
    out += '.';
    return;
  }
  out += '(';
  for (int i = 0; i < 3; ++i) {
    if (i) out += ',';
    format_tree(t->child[i], out);
  }
  out += ')';
}

class ForestParser {
 public:
  explicit ForestParser(std::string_view text) : text_(text) {}

  ArcDiagram::Forest parse_diagram() {
    ArcDiagram::Forest forest;
    for (int i = 0; i < 4; ++i) {
      if (i) expect(',');
      forest[i] = parse_tree();
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing text");
    return forest;
  }

 private:
  TernaryTree parse_tree() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      return nullptr;
    }
    expect('(');
    TernaryTree a = parse_tree();
    expect(',');
    TernaryTree b = parse_tree();
    expect(',');
    TernaryTree c = parse_tree();
    expect(')');
    return make_node(std::move(a), std::move(b), std::move(c));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, std::string(text_), what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

ArcDiagram ArcDiagram::parse(std::string_view text) { return ArcDiagram(ForestParser(text).parse_diagram()); }

std::string ArcDiagram::to_string() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += ',';
    format_tree(forest_[i], out);
  }
  return out;
}

std::size_t ArcDiagram::leaf_count() const {
  std::size_t n = 0;
  for (const auto& t : forest_) n += tb::leaf_count(t);
  return n;
}

std::vector<Leaf> ArcDiagram::leaves() const {
  std::vector<Leaf> out;
  out.reserve(leaf_count());
  auto bases = base_intervals();
  for (int i = 0; i < 4; ++i) collect_leaves(forest_[i], bases[i], base_context(i), out);
  return out;
}

std::vector<CyclicInterval> ArcDiagram::leaf_spans() const {
  std::vector<CyclicInterval> out;
  out.reserve(leaf_count());
  for (const auto& b : base_intervals()) collect_spans(forest_[b.base], b.span, out);
  return out;
}

std::vector<Arc> ArcDiagram::arcs() const {
  std::vector<Arc> out{base_arc_upper(), base_arc_lower()};
  for (const auto& b : base_intervals()) collect_arcs(forest_[b.base], b, out);
  return out;
}

ArcDiagram ArcDiagram::expand_at(std::size_t leaf) const {
  if (leaf >= leaf_count()) throw Error(ErrorCode::IndexOutOfRange, std::to_string(leaf));
  Forest f = forest_;
  for (auto& t : f) {
    std::size_t n = tb::leaf_count(t);
    if (leaf < n) {
      t = expand_tree(t, leaf);
      break;
    }
    leaf -= n;
  }
  return ArcDiagram(std::move(f));
}

std::vector<std::size_t> ArcDiagram::sibling_triples() const {
  std::vector<std::size_t> out;
  std::size_t offset = 0;
  for (const auto& t : forest_) {
    collect_triples(t, offset, out);
    offset += tb::leaf_count(t);
  }
  return out;
}

ArcDiagram ArcDiagram::collapse_at(std::size_t leaf) const {
  Forest f = forest_;
  std::size_t idx = leaf;
  for (auto& t : f) {
    std::size_t n = tb::leaf_count(t);
    if (idx < n) {
      t = collapse_tree(t, idx);
      return ArcDiagram(std::move(f));
    }
    idx -= n;
  }
  throw Error(ErrorCode::IndexOutOfRange, std::to_string(leaf));
}

bool ArcDiagram::contains(const ArcDiagram& other) const {
  for (int i = 0; i < 4; ++i) {
    if (!tree_contains(forest_[i], other.forest_[i])) return false;
  }
  return true;
}

std::optional<std::size_t> ArcDiagram::first_leaf_refined_by(const ArcDiagram& finer) const {
  std::size_t counter = 0;
  for (int i = 0; i < 4; ++i) {
    auto hit = first_refined(forest_[i], finer.forest_[i], counter);
    if (hit) return hit;
  }
  return std::nullopt;
}

ArcDiagram ArcDiagram::with_node(int base, const std::vector<Child>& path) const {
  Forest f = forest_;
  f[base] = ensure_path(f[base], path, 0);
  return ArcDiagram(std::move(f));
}

std::vector<Arc> ArcDiagram::central_arcs() const {
  auto bases = base_intervals();
  std::vector<Arc> out{base_arc_lower()};
  collect_central(forest_[0], bases[0], false, out);
  out.push_back(base_arc_upper());
  collect_central(forest_[2], bases[2], false, out);
  return out;
}

std::vector<Arc> ArcDiagram::occupied_sections() const {
  auto bases = base_intervals();
  std::vector<Arc> out;
  if (forest_[3]) out.push_back(base_arc_lower());
  collect_central(forest_[0], bases[0], true, out);
  if (forest_[1]) out.push_back(base_arc_upper());
  collect_central(forest_[2], bases[2], true, out);
  return out;
}

ArcDiagram ArcDiagram::strip_sections(const std::optional<Arc>& keep) const {
  auto bases = base_intervals();
  Forest f;
  f[0] = strip_central(forest_[0], bases[0], keep);
  f[1] = (keep && *keep == base_arc_upper()) ? forest_[1] : nullptr;
  f[2] = strip_central(forest_[2], bases[2], keep);
  f[3] = (keep && *keep == base_arc_lower()) ? forest_[3] : nullptr;
  return ArcDiagram(std::move(f));
}

bool operator==(const ArcDiagram& a, const ArcDiagram& b) {
  for (int i = 0; i < 4; ++i) {
    if (!same_tree(a.forest_[i], b.forest_[i])) return false;
  }
  return true;
}

ArcDiagram base_diagram() { return ArcDiagram(); }

ArcDiagram expand_at(const ArcDiagram& diagram, std::size_t leaf) { return diagram.expand_at(leaf); }

ArcDiagram minimal_diagram_containing(const std::vector<Arc>& arcs) {
  ArcDiagram d;
  for (const Arc& arc : arcs) {
    ArcLocation where = locate(arc);
    if (where.is_base_arc) continue;
    d = d.with_node(where.base, where.path);
  }
  return d;
}

ArcDiagram common_refinement(const ArcDiagram& a, const ArcDiagram& b) {
  ArcDiagram::Forest f;
  for (int i = 0; i < 4; ++i) f[i] = tree_union(a.forest()[i], b.forest()[i]);
  return ArcDiagram(std::move(f));
}

}  // namespace tb
