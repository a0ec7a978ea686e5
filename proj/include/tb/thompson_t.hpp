#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tb/circle.hpp"
#include "tb/element.hpp"
#include "tb/word.hpp"

namespace tb {

struct BinaryNode;
// nullptr is a leaf.
using BinaryTree = std::shared_ptr<const BinaryNode>;

struct BinaryNode {
  BinaryTree left;
  BinaryTree right;
  std::size_t leaves = 2;
};

std::size_t leaf_count(const BinaryTree& t);
BinaryTree make_binary(BinaryTree left, BinaryTree right);
bool same_tree(const BinaryTree& a, const BinaryTree& b);

// Dyadic subdivision of the circle: one binary tree over each of the halves
// [0,1/2] and [1/2,1].  Leaves are indexed ccw from 0.
using HalfForest = std::array<BinaryTree, 2>;

// An element of Thompson's group T: domain leaf i maps affinely onto range
// leaf (i + offset) mod leaf_count.
struct TreePair {
  HalfForest domain{};
  HalfForest range{};
  std::size_t offset = 0;

  // "[" t0 "," t1 " ; " t0 "," t1 " ; " offset "]", tree := "." | "(" tree "," tree ")"
  static TreePair parse(std::string_view text);
  std::string to_string() const;
  std::size_t leaf_count() const;

  friend bool operator==(const TreePair& a, const TreePair& b);
};

TreePair tp_identity();
// Rotation by 1/2.
TreePair tp_half_rotation();
TreePair tp_reduce(const TreePair& t);
// s after t.
TreePair tp_compose(const TreePair& s, const TreePair& t);
TreePair tp_inverse(const TreePair& t);
PLCircleMap tp_to_pl(const TreePair& t);
Angle tp_eval(const TreePair& t, const Angle& x);
bool tp_equal(const TreePair& s, const TreePair& t);

// Images of beta, gamma, delta; the letters B, G, D of Thompson words.
TreePair tp_generator(char letter);
TreePair tp_eval_word(const Word& w);

// Binary cut forest of a diagram with central arcs only.  Throws NotInRist.
HalfForest central_forest(const ArcDiagram& d);

// Throws NotInRist.
TreePair tau(const Element& f);
Element tau_inv(const TreePair& t);
// Action of a stab(C) element on the central arcs.  Throws NotInStab.
TreePair boundary_action(const Element& f);

// A tree pair carrying dyadic p to dyadic q.
TreePair t_transporter(const Angle& p, const Angle& q);

// A word over B, G, D whose product is t.
Word factor_T(const TreePair& t);

}  // namespace tb
