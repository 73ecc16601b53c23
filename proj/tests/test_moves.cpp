#include "doctest.h"
#include "ribbonlab/moves.hpp"
#include "ribbonlab/solver.hpp"

using namespace ribbon;

TEST_CASE("meeting on a ladder swaps the two values") {
  Ribbon lad = parse_ribbon("(1+,3+,2+,5+,4+,7+,6+,8+)");
  Move m{MoveKind::Meeting, lad.node_of_value(3), lad.node_of_value(4)};
  REQUIRE(move_applicable(lad, m));
  Ribbon b = apply_move(lad, m);
  CHECK(b.values[4] == 3);
  CHECK(b.values[1] == 4);
  CHECK(signature(b) == signature(lad));
  // k at a min and k+1 at a max is not a meeting
  CHECK_FALSE(move_applicable(lad, Move{MoveKind::Meeting, lad.node_of_value(2),
                                        lad.node_of_value(3)}));
  CHECK_THROWS_AS(apply_move(lad, Move{MoveKind::Meeting, 2, 1}), RibbonError);
}

TEST_CASE("flip changes the signature by two") {
  Ribbon b = apply_move(alpha0(), Move{MoveKind::Flip, 1});
  CHECK(b == parse_ribbon("(1+,2-)"));
  CHECK(signature(b) == 0);
}

TEST_CASE("birth and death are inverse") {
  Ribbon a = parse_ribbon("(1+,3+,2-,4+)");
  Move d{MoveKind::Death, 1, 2};
  REQUIRE(move_applicable(a, d));
  CHECK(apply_move(a, d) == alpha0());
  Move birth{MoveKind::Birth};
  birth.arc = 0;
  birth.gap = 1;
  birth.first_mark = 1;
  CHECK(apply_move(alpha0(), birth) == a);
}

TEST_CASE("jump classes and sets") {
  CHECK(jump_set('a') == std::vector<int>{0, -1});
  CHECK(jump_set('j') == std::vector<int>{0, -1, 1});
  Ribbon lad = parse_ribbon("(1+,3+,2+,5+,4+,7+,6+,8+)");
  Move m{MoveKind::Meeting, lad.node_of_value(3), lad.node_of_value(4)};
  CHECK(jump_class(lad, m) == 'a');
  int eps = invariant(apply_move(lad, m), Kind::Gamma) - invariant(lad, Kind::Gamma);
  CHECK((eps == 0 || eps == -1));
}

TEST_CASE("all_moves yields applicable moves only") {
  Ribbon a = parse_ribbon("(1+,6+,2-,4+,3+,5-)");
  for (const auto& m : all_moves(a)) {
    CHECK(move_applicable(a, m));
    Ribbon b = apply_move(a, m);
    if (m.kind == MoveKind::Flip)
      CHECK(std::abs(signature(b) - signature(a)) == 2);
    else
      CHECK(signature(b) == signature(a));
  }
}
