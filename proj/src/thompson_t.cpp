#include "tb/thompson_t.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace tb {

namespace {

const Rational kHalf(1, 2);

std::size_t mod(long v, std::size_t n) {
  long m = v % static_cast<long>(n);
  return static_cast<std::size_t>(m < 0 ? m + static_cast<long>(n) : m);
}

std::size_t forest_leaves(const HalfForest& f) { return leaf_count(f[0]) + leaf_count(f[1]); }

struct Span {
  Rational lo;
  Rational length;
};

void collect_spans(const BinaryTree& t, const Rational& lo, const Rational& length, std::vector<Span>& out) {
  if (!t) {
    out.push_back({lo, length});
    return;
  }
  Rational half = length / 2;
  collect_spans(t->left, lo, half, out);
  collect_spans(t->right, lo + half, half, out);
}

std::vector<Span> spans(const HalfForest& f) {
  std::vector<Span> out;
  collect_spans(f[0], 0, kHalf, out);
  collect_spans(f[1], kHalf, kHalf, out);
  return out;
}

BinaryTree expand_tree(const BinaryTree& t, std::size_t leaf) {
  if (!t) {
    if (leaf != 0) throw Error(ErrorCode::IndexOutOfRange, std::to_string(leaf));
    return make_binary(nullptr, nullptr);
  }
  std::size_t left = leaf_count(t->left);
  if (leaf < left) return make_binary(expand_tree(t->left, leaf), t->right);
  return make_binary(t->left, expand_tree(t->right, leaf - left));
}

HalfForest expand(const HalfForest& f, std::size_t leaf) {
  std::size_t first = leaf_count(f[0]);
  if (leaf < first) return {expand_tree(f[0], leaf), f[1]};
  return {f[0], expand_tree(f[1], leaf - first)};
}

void collect_pairs(const BinaryTree& t, std::size_t base, std::vector<std::size_t>& out) {
  if (!t) return;
  if (!t->left && !t->right) {
    out.push_back(base);
    return;
  }
  collect_pairs(t->left, base, out);
  collect_pairs(t->right, base + leaf_count(t->left), out);
}

// Leaf indices i such that i, i+1 are the two leaves of one caret.
std::vector<std::size_t> sibling_pairs(const HalfForest& f) {
  std::vector<std::size_t> out;
  collect_pairs(f[0], 0, out);
  collect_pairs(f[1], leaf_count(f[0]), out);
  return out;
}

BinaryTree collapse_tree(const BinaryTree& t, std::size_t leaf) {
  if (!t) throw Error(ErrorCode::IndexOutOfRange, std::to_string(leaf));
  if (!t->left && !t->right && leaf == 0) return nullptr;
  std::size_t left = leaf_count(t->left);
  if (leaf < left) return make_binary(collapse_tree(t->left, leaf), t->right);
  return make_binary(t->left, collapse_tree(t->right, leaf - left));
}

HalfForest collapse(const HalfForest& f, std::size_t leaf) {
  std::size_t first = leaf_count(f[0]);
  if (leaf < first) return {collapse_tree(f[0], leaf), f[1]};
  return {f[0], collapse_tree(f[1], leaf - first)};
}

BinaryTree tree_union(const BinaryTree& a, const BinaryTree& b) {
  if (!a) return b;
  if (!b) return a;
  return make_binary(tree_union(a->left, b->left), tree_union(a->right, b->right));
}

// Index of the first leaf of `coarse` that is internal in `fine`.
std::optional<std::size_t> first_refined(const HalfForest& coarse, const HalfForest& fine) {
  std::size_t index = 0;
  std::function<bool(const BinaryTree&, const BinaryTree&)> walk = [&](const BinaryTree& c, const BinaryTree& f) {
    if (!c) {
      if (f) return true;
      ++index;
      return false;
    }
    if (!f) throw Error(ErrorCode::Internal, "", "refinement target is coarser");
    return walk(c->left, f->left) || walk(c->right, f->right);
  };
  for (int h = 0; h < 2; ++h) {
    if (walk(coarse[h], fine[h])) return index;
  }
  return std::nullopt;
}

TreePair expand_pair(const TreePair& t, std::size_t leaf) {
  const std::size_t n = t.leaf_count();
  const std::size_t partner = (leaf + t.offset) % n;
  return {expand(t.domain, leaf), expand(t.range, partner),
          mod(static_cast<long>(partner) - static_cast<long>(leaf), n + 1)};
}

// --- parsing ---------------------------------------------------------------

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, std::string(text), what + " at position " + std::to_string(pos));
  }
  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  BinaryTree tree(int depth = 0) {
    if (depth > 200) fail("tree too deep");
    skip();
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      return nullptr;
    }
    expect('(');
    BinaryTree l = tree(depth + 1);
    expect(',');
    BinaryTree r = tree(depth + 1);
    expect(')');
    return make_binary(std::move(l), std::move(r));
  }
  HalfForest forest() {
    BinaryTree a = tree();
    expect(',');
    BinaryTree b = tree();
    return {std::move(a), std::move(b)};
  }
};

std::string tree_string(const BinaryTree& t) {
  if (!t) return ".";
  return "(" + tree_string(t->left) + "," + tree_string(t->right) + ")";
}

std::string forest_string(const HalfForest& f) { return tree_string(f[0]) + "," + tree_string(f[1]); }

// --- conversions to and from arc diagrams ---------------------------------

BinaryTree to_binary(const TernaryTree& t, const Element& f) {
  if (!t) return nullptr;
  if (t->child[1]) throw Error(ErrorCode::NotInRist, "", "non-central arc in " + f.to_string());
  return make_binary(to_binary(t->child[0], f), to_binary(t->child[2], f));
}

TernaryTree to_ternary(const BinaryTree& t) {
  if (!t) return nullptr;
  return make_node(to_ternary(t->left), nullptr, to_ternary(t->right));
}

HalfForest binary_forest(const ArcDiagram& d, const Element& f) {
  const auto& forest = d.forest();
  if (forest[1] || forest[3]) throw Error(ErrorCode::NotInRist, "", "non-central arc in " + f.to_string());
  return {to_binary(forest[0], f), to_binary(forest[2], f)};
}

ArcDiagram ternary_diagram(const HalfForest& f) {
  return ArcDiagram({to_ternary(f[0]), nullptr, to_ternary(f[1]), nullptr});
}

// --- factorisation --------------------------------------------------------

// Cut forest with p as a leaf endpoint, and the index of the leaf starting at p.
std::pair<HalfForest, std::size_t> cut_forest(const Rational& p) {
  std::function<BinaryTree(const Rational&, const Rational&)> build = [&](const Rational& lo, const Rational& len) {
    if (!(lo < p && p < lo + len)) return BinaryTree{};
    Rational half = len / 2;
    return make_binary(build(lo, half), build(lo + half, half));
  };
  HalfForest f{build(0, kHalf), build(kHalf, kHalf)};
  std::size_t index = 0;
  for (const Span& s : spans(f)) {
    if (s.lo < p) ++index;
  }
  return {f, index};
}

BinaryTree left_vine(std::size_t leaves) {
  BinaryTree t;
  for (std::size_t i = 1; i < leaves; ++i) t = make_binary(t, nullptr);
  return t;
}

// Depths along the right spine of the rotations ((L1,L2),R) -> (L1,(L2,R))
// that turn t into the right vine, in the order performed.
void vine_rotations(BinaryTree t, long depth, std::vector<long>& out) {
  while (t) {
    while (t->left) {
      t = make_binary(t->left->left, make_binary(t->left->right, t->right));
      out.push_back(depth);
    }
    t = t->right;
    ++depth;
  }
}

Word repeat(const Word& w, long times) {
  Word out;
  for (long i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// The generator x_n of F: x_0 = B, x_n = B^-(n-1) (D G D') B^(n-1).
Word x_word(long n) {
  if (n == 0) return {{'B', false}};
  const Word b{{'B', false}};
  const Word x1{{'D', false}, {'G', false}, {'D', true}};
  return concat({repeat(inverse_word(b), n - 1), x1, repeat(b, n - 1)});
}

// Word for g_T, the element rewriting tree t (root included) into the right vine.
Word vine_word(const BinaryTree& t) {
  std::vector<long> depths;
  vine_rotations(t, 0, depths);
  Word out;
  for (auto it = depths.rbegin(); it != depths.rend(); ++it) out = concat(out, inverse_word(x_word(*it)));
  return out;
}

// t must fix 0 (offset 0).
Word factor_F(const TreePair& t) {
  BinaryTree d = make_binary(t.domain[0], t.domain[1]);
  BinaryTree r = make_binary(t.range[0], t.range[1]);
  return concat(inverse_word(vine_word(r)), vine_word(d));
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t leaf_count(const BinaryTree& t) { return t ? t->leaves : 1; }

BinaryTree make_binary(BinaryTree left, BinaryTree right) {
  std::size_t n = leaf_count(left) + leaf_count(right);
  return std::make_shared<const BinaryNode>(BinaryNode{std::move(left), std::move(right), n});
}

bool same_tree(const BinaryTree& a, const BinaryTree& b) {
  if (!a || !b) return !a && !b;
  if (a == b) return true;
  return a->leaves == b->leaves && same_tree(a->left, b->left) && same_tree(a->right, b->right);
}

TreePair TreePair::parse(std::string_view text) {
  TreeParser p{text};
  p.expect('[');
  HalfForest d = p.forest();
  p.expect(';');
  HalfForest r = p.forest();
  p.expect(';');
  p.skip();
  std::size_t start = p.pos;
  if (p.pos < text.size() && text[p.pos] == '-') ++p.pos;
  while (p.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[p.pos]))) ++p.pos;
  std::string digits(text.substr(start, p.pos - start));
  if (digits.empty() || digits == "-" || digits.size() > 18) p.fail("expected offset");
  p.expect(']');
  p.skip();
  if (p.pos != text.size()) p.fail("trailing text");
  const std::size_t n = forest_leaves(d);
  if (forest_leaves(r) != n)
    throw Error(ErrorCode::LeafCountMismatch, std::to_string(n) + "/" + std::to_string(forest_leaves(r)));
  return {d, r, mod(std::stol(digits), n)};
}

std::string TreePair::to_string() const {
  return "[" + forest_string(domain) + " ; " + forest_string(range) + " ; " + std::to_string(offset) + "]";
}

std::size_t TreePair::leaf_count() const { return forest_leaves(domain); }

bool operator==(const TreePair& a, const TreePair& b) {
  return a.offset == b.offset && same_tree(a.domain[0], b.domain[0]) && same_tree(a.domain[1], b.domain[1]) &&
         same_tree(a.range[0], b.range[0]) && same_tree(a.range[1], b.range[1]);
}

TreePair tp_identity() { return {}; }

TreePair tp_half_rotation() { return {{}, {}, 1}; }

TreePair tp_reduce(const TreePair& t) {
  TreePair cur = t;
  while (true) {
    const std::size_t n = cur.leaf_count();
    auto targets = sibling_pairs(cur.range);
    bool reduced = false;
    for (std::size_t i : sibling_pairs(cur.domain)) {
      std::size_t j = (i + cur.offset) % n;
      if (std::find(targets.begin(), targets.end(), j) == targets.end()) continue;
      cur = {collapse(cur.domain, i), collapse(cur.range, j), mod(static_cast<long>(j) - static_cast<long>(i), n - 1)};
      reduced = true;
      break;
    }
    if (!reduced) return cur;
  }
}

TreePair tp_compose(const TreePair& s, const TreePair& t) {
  const HalfForest target{tree_union(t.range[0], s.domain[0]), tree_union(t.range[1], s.domain[1])};
  TreePair first = t;
  while (auto j = first_refined(first.range, target)) {
    first = expand_pair(first, mod(static_cast<long>(*j) - static_cast<long>(first.offset), first.leaf_count()));
  }
  TreePair second = s;
  while (auto i = first_refined(second.domain, target)) second = expand_pair(second, *i);
  return tp_reduce({first.domain, second.range, (first.offset + second.offset) % first.leaf_count()});
}

TreePair tp_inverse(const TreePair& t) {
  const std::size_t n = t.leaf_count();
  return {t.range, t.domain, (n - t.offset) % n};
}

PLCircleMap tp_to_pl(const TreePair& t) {
  auto dom = spans(t.domain);
  auto ran = spans(t.range);
  const std::size_t n = dom.size();
  std::vector<PLCircleMap::Breakpoint> points;
  for (std::size_t i = 0; i < n; ++i)
    points.emplace_back(Angle::from_rational(dom[i].lo), Angle::from_rational(ran[(i + t.offset) % n].lo));
  return PLCircleMap::from_breakpoints(std::move(points));
}

Angle tp_eval(const TreePair& t, const Angle& x) {
  auto dom = spans(t.domain);
  auto ran = spans(t.range);
  const std::size_t n = dom.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rational into = x.value() - dom[i].lo;
    if (sgn(into) >= 0 && into < dom[i].length) {
      const Span& target = ran[(i + t.offset) % n];
      return Angle::from_rational(target.lo + into * target.length / dom[i].length);
    }
  }
  throw Error(ErrorCode::Internal, x.to_string(), "leaves do not cover the circle");
}

bool tp_equal(const TreePair& s, const TreePair& t) { return tp_reduce(s) == tp_reduce(t); }

TreePair tp_generator(char letter) {
  switch (letter) {
    case 'B': return TreePair::parse("[.,(.,.) ; (.,.),. ; 0]");
    case 'G': return TreePair::parse("[(.,(.,.)),. ; ((.,.),.),. ; 0]");
    case 'D': return tp_half_rotation();
  }
  throw Error(ErrorCode::Parse, std::string(1, letter), "unknown Thompson letter");
}

TreePair tp_eval_word(const Word& w) {
  TreePair out;
  for (const Letter& l : w) {
    TreePair g = tp_generator(l.symbol);
    out = tp_compose(out, l.inverse ? tp_inverse(g) : g);
  }
  return out;
}

HalfForest central_forest(const ArcDiagram& d) {
  Element witness = Element::make(d, d, 0);
  return binary_forest(d, witness);
}

TreePair tau(const Element& f) {
  Element r = reduce(f);
  TreePair out{binary_forest(r.domain(), f), binary_forest(r.range(), f), 0};
  if (r.offset() % 2 != 0) throw Error(ErrorCode::NotInRist, "", "offset moves the central gap");
  out.offset = r.offset() / 2;
  return tp_reduce(out);
}

Element tau_inv(const TreePair& t) {
  return Element::make(ternary_diagram(t.domain), ternary_diagram(t.range), 2 * static_cast<long>(t.offset));
}

TreePair boundary_action(const Element& f) {
  if (!is_in_stab_C(f)) throw Error(ErrorCode::NotInStab, image_of_gap(f, GapId::central()).to_string());
  Element r = reduce(f);
  auto range_leaves = r.range().leaves();
  long adjacent = 0;
  for (std::size_t i = 0; i < r.offset(); ++i) {
    if (std::holds_alternative<CentralAdjacent>(range_leaves[i].context)) ++adjacent;
  }
  return tau(Element::make(r.domain().strip_sections(), r.range().strip_sections(), 2 * adjacent));
}

TreePair t_transporter(const Angle& p, const Angle& q) {
  if (!is_dyadic(p.value())) throw Error(ErrorCode::UnsupportedDenominator, p.to_string(), "not dyadic");
  if (!is_dyadic(q.value())) throw Error(ErrorCode::UnsupportedDenominator, q.to_string(), "not dyadic");
  auto [d, ip] = cut_forest(p.value());
  auto [r, iq] = cut_forest(q.value());
  while (forest_leaves(d) < forest_leaves(r)) d = expand(d, forest_leaves(d) - 1);
  while (forest_leaves(r) < forest_leaves(d)) r = expand(r, forest_leaves(r) - 1);
  const std::size_t n = forest_leaves(d);
  return tp_reduce({d, r, mod(static_cast<long>(iq) - static_cast<long>(ip), n)});
}

Word factor_T(const TreePair& t) {
  const Angle q = tp_eval(t, Angle());
  if (sgn(q.value()) == 0) return factor_F(tp_reduce(t));
  // f in F with f(q) = 1/2, then the half rotation sends it to 0.
  auto [d, index] = cut_forest(q.value());
  const std::size_t n = forest_leaves(d);
  TreePair f{d, {left_vine(index), left_vine(n - index)}, 0};
  TreePair h = tp_compose(tp_half_rotation(), tp_compose(f, t));
  if (h.offset != 0) throw Error(ErrorCode::Internal, h.to_string(), "normalised pair moves 0");
  return concat({inverse_word(factor_F(f)), Word{{'D', true}}, factor_F(h)});
}

}  // namespace tb
