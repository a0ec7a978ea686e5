#pragma once

// Helpers shared by the unit tests and the acceptance runner.  The oracle
// namespace holds reference computations written independently of the
// library: they use plain rationals and never call the descent or
// subdivision code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tb/element.hpp"
#include "tb/lamination.hpp"
#include "tb/word.hpp"
#include "tb/words.hpp"

namespace support {

// Random word over the given letters (each with a random exponent).
inline tb::Word random_word_over(std::mt19937_64& rng, const std::string& letters, std::size_t length) {
  tb::Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back({letters[rng() % letters.size()], rng() % 2 == 1});
  }
  return w;
}

inline tb::Element random_element(std::mt19937_64& rng, std::size_t max_length, const std::string& letters = "abgd") {
  return tb::eval_word(random_word_over(rng, letters, rng() % (max_length + 1)));
}

// Applies `steps` expansions at random leaves.
inline tb::Element random_expansion(tb::Element f, std::mt19937_64& rng, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) f = f.expand(rng() % f.leaf_count());
  return f;
}

// An element of stab(C) built from f by carrying its image of the central gap back.
inline tb::Element stabilising(const tb::Element& f) {
  tb::Word w = tb::transport_gap_to_center(tb::image_of_gap(f, tb::GapId::central()));
  return tb::compose(tb::eval_word(w), f);
}

namespace oracle {

using Q = mpq_class;
// Unordered chord with lo < hi, both in [0,1).
using Chord = std::pair<Q, Q>;

inline Q wrap(Q q) {
  while (q >= 1) q -= 1;
  while (q < 0) q += 1;
  return q;
}

inline Chord chord(const Q& a, const Q& b) {
  Q x = wrap(a), y = wrap(b);
  return x < y ? Chord{x, y} : Chord{y, x};
}

inline Chord chord(const tb::Arc& a) { return chord(a.lo().value(), a.hi().value()); }

// Chords cross when exactly one endpoint of one lies strictly inside the other
// and no endpoints are shared.
inline bool crosses(const Chord& p, const Chord& q) {
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) return false;
  auto inside = [&](const Q& t) { return p.first < t && t < p.second; };
  return inside(q.first) != inside(q.second);
}

inline Q minor_length(const Chord& c) {
  Q d = c.second - c.first;
  return d <= Q(1, 2) ? d : Q(1) - d;
}

// Level of a leaf: log2 of its reduced denominator over 3.
inline int level_of(const Chord& c) {
  mpz_class den = lcm(c.first.get_den(), c.second.get_den()) / 3;
  int n = 0;
  while (den > 1) {
    den /= 2;
    ++n;
  }
  return n;
}

// Leaves of the lamination up to `max_level`, generated as iterated preimages
// under angle doubling starting from the major leaf {1/3, 2/3}.  A leaf of
// minor length y pulls back to the pair of minor length y/2; the other pair
// has length 1/2 - y/2, longer than the major.  The major leaf itself pulls
// back to both major leaves.
inline std::set<Chord> pullback_leaves(int max_level) {
  const Chord major = chord(Q(1, 3), Q(2, 3));
  const Chord sister = chord(Q(1, 6), Q(5, 6));
  std::set<Chord> all{major};
  std::vector<Chord> frontier{major};
  while (!frontier.empty()) {
    std::vector<Chord> next;
    for (const Chord& c : frontier) {
      if (level_of(c) >= max_level) continue;
      Q a = c.first / 2, b = c.second / 2;
      std::vector<std::pair<Chord, Chord>> options{{chord(a, b), chord(a + Q(1, 2), b + Q(1, 2))},
                                                  {chord(a, b + Q(1, 2)), chord(b, a + Q(1, 2))}};
      for (const auto& [p, q] : options) {
        bool keep = c == major ? (p == major || p == sister) && (q == major || q == sister)
                               : minor_length(p) * 2 == minor_length(c);
        if (!keep) continue;
        for (const Chord& r : {p, q}) {
          if (all.insert(r).second) next.push_back(r);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Leaves that no other leaf separates from the centre of the disk.  A leaf
// separates c when c lies inside its minor side.
inline bool unseparated(const Chord& c, const std::set<Chord>& leaves) {
  auto on_minor_side = [](const Chord& outer, const Chord& inner) {
    Q len = outer.second - outer.first;
    Q start = len <= Q(1, 2) ? outer.first : outer.second;
    Q span = len <= Q(1, 2) ? len : Q(1) - len;
    return wrap(inner.first - start) <= span && wrap(inner.second - start) <= span;
  };
  for (const Chord& other : leaves) {
    if (other != c && on_minor_side(other, c)) return false;
  }
  return true;
}

// Piecewise-linear evaluation straight from a breakpoint list x_i -> y_i.
inline Q pl_value(const std::vector<std::pair<Q, Q>>& points, const Q& t) {
  const std::size_t n = points.size();
  if (n == 1) return wrap(t + points[0].second - points[0].first);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x0, y0] = points[i];
    const auto& [x1, y1] = points[(i + 1) % n];
    Q dx = wrap(x1 - x0), dy = wrap(y1 - y0), into = wrap(t - x0);
    if (into < dx) return wrap(y0 + into * dy / dx);
  }
  return Q(-1);
}

}  // namespace oracle

}  // namespace support
