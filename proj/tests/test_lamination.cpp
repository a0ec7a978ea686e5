#include <doctest.h>

#include "support.hpp"
#include "tb/lamination.hpp"

using namespace tb;
namespace oracle = support::oracle;

TEST_SUITE("lamination") {
  TEST_CASE("base arcs and primary arcs") {
    CHECK(base_arc_upper().to_string() == "{1/3, 2/3}");
    CHECK(base_arc_lower().to_string() == "{1/6, 5/6}");
    CHECK(base_arc_lower().lo().to_string() == "5/6");
    auto base = base_intervals();
    CHECK(primary_arc(base[0]).to_string() == "{5/24, 7/24}");
    CHECK(primary_arc(base[1]).to_string() == "{5/12, 7/12}");
  }

  TEST_CASE("arc_check accepts leaves and rejects non-leaves") {
    CHECK(arc_check(Angle::make(11, 12), Angle::make(1, 12)).to_string() == "{1/12, 11/12}");
    CHECK(arc_check(Angle::make(7, 12), Angle::make(5, 12)).to_string() == "{5/12, 7/12}");
    for (auto [a, b] : {std::pair{1, 5}, {1, 2}, {2, 3}}) {
      try {
        arc_check(Angle::make(a, 12), Angle::make(b, 12));
        FAIL("accepted a non-leaf");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAnArc);
      }
    }
    try {
      arc_check(Angle::make(2, 3), Angle());
    } catch (const Error& e) {
      CHECK(e.witness() == "{0,2/3}");
    }
  }

  TEST_CASE("arc parsing") {
    CHECK(Arc::parse("{1/6, 5/6}") == base_arc_lower());
    CHECK(Arc::parse("{5/6,1/6}") == base_arc_lower());
    CHECK_THROWS_AS(Arc::parse("{1/6 5/6}"), Error);
    CHECK_THROWS_AS(Arc::parse("{1/4, 3/4}"), Error);
  }

  TEST_CASE("levels and indices") {
    Arc a = Arc::parse("{5/24, 7/24}");
    CHECK(a.level() == 3);
    CHECK(Arc::from_index(a.level(), a.index()) == a);
    CHECK(base_arc_upper().index() == 1);
  }

  TEST_CASE("doubling maps leaves to leaves") {
    for (const Arc& a : enumerate_arcs(6)) CHECK_NOTHROW(double_arc(a));
    CHECK(double_arc(base_arc_lower()) == base_arc_upper());
    CHECK(double_arc(base_arc_upper()) == base_arc_upper());
  }

  TEST_CASE("enumeration matches the pullback oracle") {
    auto ours = enumerate_arcs(7);
    auto theirs = oracle::pullback_leaves(7);
    std::set<oracle::Chord> mine;
    for (const Arc& a : ours) mine.insert(oracle::chord(a));
    CHECK(mine.size() == ours.size());
    CHECK(mine == theirs);
    // Frozen count: 2 arcs at level 1 and 2^(n-1) at each level n >= 2.
    CHECK(ours.size() == 128);
  }

  TEST_CASE("ancestors and centrality") {
    CHECK(ancestors(base_arc_upper()).empty());
    Arc inner = Arc::parse("{5/12, 7/12}");
    REQUIRE(ancestors(inner).size() == 1);
    CHECK(ancestors(inner).front() == base_arc_upper());
    CHECK_FALSE(is_central(inner));
    CHECK(is_central(Arc::parse("{5/24, 7/24}")));
    auto leaves = oracle::pullback_leaves(6);
    for (const Arc& a : enumerate_arcs(6)) CHECK(is_central(a) == oracle::unseparated(oracle::chord(a), leaves));
  }

  TEST_CASE("central labels") {
    CHECK(central_label(base_arc_lower()).to_string() == "0");
    CHECK(central_label(base_arc_upper()).to_string() == "1/2");
    CHECK(central_label(Arc::parse("{5/24, 7/24}")).to_string() == "1/4");
    CHECK_THROWS_AS(central_label(Arc::parse("{5/12, 7/12}")), Error);
    for (long k = 0; k < 64; ++k) {
      Angle d = Angle::make(k, 64);
      CHECK(central_label(arc_for_label(d)) == d);
    }
  }

  TEST_CASE("gaps") {
    CHECK(GapId::parse("central").is_central());
    GapId g = GapId::parse("behind {5/12, 7/12}");
    CHECK(g.to_string() == "behind {5/12, 7/12}");
    CHECK(gap_depth(GapId::central()) == 0);
    CHECK(gap_depth(GapId::behind_arc(base_arc_upper())) == 1);
    CHECK(gap_depth(g) == 2);
    CHECK(gap_color(g) == 0);
    CHECK(neighbor_gap(Arc::parse("{5/12, 7/12}"), Side::Centerside) == GapId::behind_arc(base_arc_upper()));
    CHECK(neighbor_gap(base_arc_upper(), Side::Centerside).is_central());
    CHECK_THROWS_AS(GapId::parse("outside"), Error);
  }
}
