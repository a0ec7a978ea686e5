#include <doctest.h>

#include "support.hpp"
#include "tb/words.hpp"

using namespace tb;

TEST_SUITE("words") {
  TEST_CASE("word grammar") {
    Word w = parse_word("a b' d");
    CHECK(w.size() == 3);
    CHECK(w[1] == Letter{'b', true});
    CHECK(format_word(w) == "a b' d");
    CHECK(format_word(parse_word("  a   a' ")) == "a a'");
    CHECK(free_reduce(parse_word("a b b' a' d")) == parse_word("d"));
    CHECK(inverse_word(parse_word("a b'")) == parse_word("b a'"));
    CHECK_THROWS_AS(parse_word("x"), Error);
    CHECK_THROWS_AS(parse_word("ab"), Error);
    CHECK_THROWS_AS(parse_word("a''"), Error);
  }

  TEST_CASE("eval_word") {
    CHECK(eval_word({}) == identity());
    CHECK(eval_word(parse_word("d d")) == identity());
    CHECK(eval_word(parse_word("a")) == generator(Generator::Alpha));
    // Leftmost letter applied last.
    CHECK(eval_word(parse_word("a b")) == compose(generator(Generator::Alpha), generator(Generator::Beta)));
    CHECK(equal(eval_word(parse_word("a a")), eval_word(parse_word("d' a' d a"))));
  }

  TEST_CASE("transport to the central gap") {
    CHECK(transport_gap_to_center(GapId::central()).empty());
    GapId m = GapId::behind_arc(base_arc_upper());
    CHECK(image_of_gap(eval_word(transport_gap_to_center(m)), m).is_central());
    std::size_t longest = 0;
    for (const Arc& a : enumerate_arcs(6)) {
      GapId g = GapId::behind_arc(a);
      Word w = transport_gap_to_center(g);
      CHECK(image_of_gap(eval_word(w), g).is_central());
      longest = std::max(longest, w.size());
    }
    CHECK(longest > 0);
  }

  TEST_CASE("decompose") {
    CHECK(decompose(identity()).empty());
    CHECK(equal(eval_word(decompose(generator(Generator::Delta))), generator(Generator::Delta)));
    CHECK(equal(eval_word(decompose(generator(Generator::Alpha))), generator(Generator::Alpha)));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
      Element f = support::random_element(rng, 10);
      std::size_t steps = 0;
      Word w = decompose(f, [&](std::size_t before, std::size_t after) {
        CHECK(after < before);
        ++steps;
      });
      CHECK(eval_word(w) == reduce(f));
    }
  }

  TEST_CASE("abelianization") {
    CHECK(abelianize(generator(Generator::Alpha)) == 1);
    CHECK(abelianize(generator(Generator::Beta)) == 0);
    CHECK(abelianize(generator(Generator::Gamma)) == 0);
    CHECK(abelianize(generator(Generator::Delta)) == 0);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
      Element f = support::random_element(rng, 8);
      Element g = support::random_element(rng, 8);
      CHECK(abelianize(compose(f, g)) == (abelianize(f) ^ abelianize(g)));
      CHECK(is_in_commutator(compose(inverse(f), compose(inverse(g), compose(f, g)))));
    }
  }

  TEST_CASE("random elements are deterministic") {
    CHECK(random_element(7, 0) == identity());
    CHECK(random_element(42, 8) == random_element(42, 8));
    CHECK(random_word(42, 8).size() == 8);
  }
}
