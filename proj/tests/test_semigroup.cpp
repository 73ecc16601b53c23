#include "doctest.h"
#include "ribbonlab/semigroup.hpp"
#include "ribbonlab/solver.hpp"

using namespace ribbon;

TEST_CASE("alpha0 is a unit for the connected sum") {
  Ribbon b = parse_ribbon("(1+,6+,2-,4+,3+,5+)");
  CHECK(connected_sum(alpha0(), b) == b);
  CHECK(connected_sum(b, alpha0()) == b);
}

TEST_CASE("connected sum adds invariants and signatures") {
  Ribbon a = parse_ribbon("(1+,3+,2+,4+)"), b = parse_ribbon("(1+,6+,2-,4+,3+,5+)");
  Ribbon c = connected_sum(a, b);
  CHECK(c.n() == a.n() + b.n() - 2);
  CHECK(signature(c) == signature(a) + signature(b) - 2);
  Weights wa = default_solver().weights(a), wb = default_solver().weights(b),
          wc = default_solver().weights(c);
  for (int i = 0; i < 4; ++i) CHECK(wc[i] == wa[i] + wb[i]);
  CHECK_THROWS_AS(connected_sum(parse_ribbon("(1+,2-)"), b), RibbonError);
}

TEST_CASE("extremum versus saddle construction") {
  Ribbon a1 = parse_ribbon("(1-,3-,2-,4+)");
  Ribbon lad = parse_ribbon("(1+,3+,2+,5+,4+,6+)");
  CHECK_FALSE(sum_admissible(a1, lad));
  Ribbon c = connected_sum(a1, lad, false);
  Weights w = default_solver().weights(c);
  CHECK(w[0] == 4);
  CHECK(w[2] == 2);
  CHECK(w[3] == 2);
}

TEST_CASE("compose relations") {
  MarkedRibbon a = mark_ends(parse_ribbon("(1+,3+,2+,4+)"), 0, 3);
  MarkedRibbon b;
  b.ribbon.levels = {Rational(1, 3), Rational(7, 2), Rational(5, 3), Rational(9, 2)};
  b.ribbon.marks = {1, -1, 1, 1};
  b.origin = 0;
  b.end = 3;
  MarkedRibbon ab = compose(a, b);
  Ribbon da = discrete(a), db = discrete(b), dab = discrete(ab);
  CHECK(signature(dab) == signature(da) + signature(db) - 2);
  CHECK(index_of(dab) == index_of(da) + index_of(db));
  CHECK(invariant(dab, Kind::Gamma) <= invariant(da, Kind::Gamma) + invariant(db, Kind::Gamma));
  CHECK(discrete(marked_invert(marked_invert(ab))) == dab);
  // level 3 of a meets the translated level 1 of c
  MarkedRibbon c = mark_ends(parse_ribbon("(1+,3+,2+,4+)"), 2, 3);
  CHECK_THROWS_AS(compose(a, c), RibbonError);
}

TEST_CASE("ternary compose signature") {
  MarkedRibbon a = mark_ends(alpha0(), 0, 1);
  MarkedRibbon b;
  b.ribbon.levels = {Rational(1, 3), Rational(5, 2)};
  b.ribbon.marks = {1, 1};
  b.origin = 0;
  b.end = 1;
  MarkedRibbon c;
  c.ribbon.levels = {Rational(1, 5), Rational(13, 4)};
  c.ribbon.marks = {1, 1};
  c.origin = 0;
  c.end = 1;
  Ribbon t = discrete(ternary_compose(a, b, c));
  CHECK(signature(t) == 2 + 2 + 2 - 4);
  CHECK(t.n() == 4);
}
