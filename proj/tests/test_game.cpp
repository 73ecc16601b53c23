#include "doctest.h"
#include "ribbonlab/game.hpp"

using namespace ribbon;

TEST_CASE("new game setup") {
  GameState g = new_game(ladder_perm(6));
  CHECK(g.perm == std::vector<int>{1, 3, 2, 5, 4, 6});
  CHECK(g.marks[0] == 1);
  CHECK(g.marks[5] == 1);
  CHECK(g.pool_a == 2);
  CHECK(g.pool_b == 2);
  CHECK(g.to_move == 'A');
  CHECK_THROWS_AS(new_game(std::vector<int>{1, 2}), GameError);
  CHECK_THROWS_AS(new_game(14, 1), GameError);
}

TEST_CASE("illegal moves") {
  GameState g = new_game(ladder_perm(6));
  CHECK_FALSE(legal(g, 0));
  try {
    play(g, 0);
    FAIL("occupied node accepted");
  } catch (const GameError& e) {
    CHECK(e.code == "NotYourTurnOrOccupied");
  }
  play(g, 1);
  CHECK(g.marks[1] == -1);
  CHECK(g.to_move == 'B');
}

TEST_CASE("mirror strategy wins ladders") {
  for (int n = 4; n <= 8; n += 2) {
    for (int first = 1; first < n - 1; ++first) {
      GameState g = new_game(ladder_perm(n));
      int a = first;
      while (!g.finished) {
        if (!legal(g, a))
          for (a = 0; !legal(g, a); ++a) {
          }
        play(g, a);
        play(g, mirror_reply(g, a));
        a = first;
      }
      CHECK(g.winner == 'B');
    }
    CHECK(solve_game(ladder_perm(n)) == 'B');
  }
}

TEST_CASE("hints") {
  GameState small = new_game(ladder_perm(6));
  GameSolver s(small.perm);
  for (const auto& h : hints(small, &s)) {
    CHECK_FALSE(h.heuristic);
    CHECK(h.verdict == 'B');
  }
  GameState big = new_game(10, 3);
  auto hs = hints(big);
  CHECK_FALSE(hs.empty());
  for (const auto& h : hs) CHECK(h.heuristic);
}

TEST_CASE("seeded games replay") {
  GameState a = new_game(10, 42), b = new_game(10, 42);
  CHECK(a.perm == b.perm);
}
