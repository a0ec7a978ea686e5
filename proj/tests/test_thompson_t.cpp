#include <doctest.h>

#include "support.hpp"
#include "tb/thompson_t.hpp"

using namespace tb;

TEST_SUITE("thompson_t") {
  TEST_CASE("tree pair grammar") {
    TreePair t = TreePair::parse("[.,(.,.) ; (.,.),. ; 0]");
    CHECK(t.to_string() == "[.,(.,.) ; (.,.),. ; 0]");
    CHECK(t.leaf_count() == 3);
    CHECK(TreePair::parse(" [ . , . ; . , . ; 3 ] ").offset == 1);
    CHECK_THROWS_AS(TreePair::parse("[.,. ; .,(.,.) ; 0]"), Error);
    CHECK_THROWS_AS(TreePair::parse("[.,. ; .,. ]"), Error);
  }

  TEST_CASE("half rotation") {
    TreePair r = tp_half_rotation();
    CHECK(tp_to_pl(r) == PLCircleMap::rotation(Angle::make(1, 2)));
    CHECK(tp_compose(r, r) == tp_identity());
  }

  TEST_CASE("tau of the generators") {
    CHECK(tau(identity()) == tp_identity());
    CHECK(tau(generator(Generator::Delta)) == tp_half_rotation());
    TreePair b = tau(generator(Generator::Beta));
    CHECK(tp_to_pl(b).to_string() == "0:0,1/2:1/4,3/4:1/2");
    CHECK(b == tp_generator('B'));
    CHECK(tau(generator(Generator::Gamma)) == tp_generator('G'));
    CHECK_THROWS_AS(tau(generator(Generator::Alpha)), Error);
  }

  TEST_CASE("tau_inv") {
    CHECK(tau_inv(tp_identity()) == identity());
    CHECK(tau_inv(tau(generator(Generator::Gamma))) == generator(Generator::Gamma));
    TreePair quarter = TreePair::parse("[(.,.),(.,.) ; (.,.),(.,.) ; 1]");
    Element q = tau_inv(quarter);
    CHECK(is_in_rist_C(q));
    for (long k = 0; k < 16; ++k) {
      Angle d = Angle::make(k, 16);
      Arc image = image_of_arc(q, arc_for_label(d));
      CHECK(central_label(image) == d + Rational(1, 4));
    }
  }

  TEST_CASE("tau is a homomorphism and injective on rist words") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      Element f = support::random_element(rng, 8, "bgd");
      Element g = support::random_element(rng, 8, "bgd");
      CHECK(tau(compose(f, g)) == tp_compose(tau(f), tau(g)));
      CHECK(tau_inv(tau(f)) == reduce(f));
      CHECK((tau(f) == tau(g)) == equal(f, g));
    }
  }

  TEST_CASE("boundary action") {
    CHECK(boundary_action(identity()) == tp_identity());
    CHECK(boundary_action(generator(Generator::Beta)) == tau(generator(Generator::Beta)));
    CHECK_THROWS_AS(boundary_action(generator(Generator::Alpha)), Error);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
      Element f = support::stabilising(support::random_element(rng, 8));
      Element g = support::stabilising(support::random_element(rng, 8));
      CHECK(boundary_action(compose(f, g)) == tp_compose(boundary_action(f), boundary_action(g)));
      // The stripped element acts on central arcs exactly as f does.
      Element stripped = tau_inv(boundary_action(f));
      for (long k = 0; k < 32; ++k) {
        Arc c = arc_for_label(Angle::make(k, 32));
        CHECK(image_of_arc(f, c) == image_of_arc(stripped, c));
      }
    }
  }

  TEST_CASE("transporters") {
    CHECK(t_transporter(Angle::make(1, 2), Angle::make(1, 2)) == tp_identity());
    CHECK(tp_eval(t_transporter(Angle(), Angle::make(1, 2)), Angle()).to_string() == "1/2");
    CHECK(tp_eval(t_transporter(Angle::make(3, 4), Angle::make(1, 2)), Angle::make(3, 4)).to_string() == "1/2");
    for (long p = 0; p < 32; ++p) {
      for (long q = 0; q < 32; q += 5) {
        TreePair t = t_transporter(Angle::make(p, 32), Angle::make(q, 32));
        CHECK(tp_eval(t, Angle::make(p, 32)) == Angle::make(q, 32));
      }
    }
    CHECK_THROWS_AS(t_transporter(Angle::make(1, 3), Angle()), Error);
  }

  TEST_CASE("factor_T") {
    CHECK(factor_T(tp_identity()).empty());
    CHECK(format_word(factor_T(tp_generator('B'))) == "B");
    std::mt19937_64 rng(9);
    std::size_t worst = 0;
    for (int i = 0; i < 60; ++i) {
      TreePair t = tp_eval_word(support::random_word_over(rng, "BGD", rng() % 12));
      Word w = factor_T(t);
      CHECK(tp_eval_word(w) == t);
      worst = std::max(worst, w.size() / std::max<std::size_t>(t.leaf_count(), 1));
    }
    // Regression bound on letters per leaf.
    CHECK(worst <= 12);
  }

  TEST_CASE("PL slopes are powers of two") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
      TreePair t = tp_eval_word(support::random_word_over(rng, "BGD", 10));
      for (const Segment& s : tp_to_pl(t).segments()) CHECK(power_of_two_exponent(s.slope()).has_value());
    }
  }
}
