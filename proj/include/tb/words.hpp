#pragma once

#include <cstdint>
#include <functional>

#include "tb/element.hpp"
#include "tb/word.hpp"

namespace tb {

// Reduced product of the letters a, b, g, d (alpha, beta, gamma, delta).
Element eval_word(const Word& w);

// A word whose element maps `gap` onto the central gap.
Word transport_gap_to_center(const GapId& gap);

// Called at every recursion step of decompose with the arc count of the
// element being split and of each smaller piece.
using MeasureHook = std::function<void(std::size_t before, std::size_t after)>;

// A word evaluating to f.  Throws Internal if the induction measure fails to
// decrease.
Word decompose(const Element& f, const MeasureHook& hook = {});

// 0 when f preserves the two-colouring of gaps, 1 otherwise.
int abelianize(const Element& f);
bool is_in_commutator(const Element& f);

// Letters drawn as rng() % 8 from a, a', b, b', g, g', d, d' with
// std::mt19937_64 seeded by `seed`.
Word random_word(std::uint64_t seed, std::size_t length);
Element random_element(std::uint64_t seed, std::size_t length);

}  // namespace tb
