#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ribbonlab/core.hpp"

namespace ribbon {

struct GameError : std::runtime_error {
  std::string code;  // BadN, NotYourTurnOrOccupied
  GameError(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

struct GameState {
  std::vector<int> perm;    // canonical zig-zag values
  std::vector<int> marks;   // 0 = unmarked
  int pool_a = 0, pool_b = 0;
  char to_move = 'A';
  bool finished = false;
  char winner = 0;
  int gamma = -1;
  std::vector<int> history;  // nodes in play order
};

GameState new_game(const std::vector<int>& perm);
GameState new_game(int n, std::uint64_t seed);
// A places -, B places +. Throws GameError.
void play(GameState& g, int node);
Ribbon final_ribbon(const GameState& g);
bool legal(const GameState& g, int node);

// Exact optimal play over partial markings of one permutation.
class GameSolver {
 public:
  explicit GameSolver(std::vector<int> perm);
  // Winner under optimal play from this marking (0 = unmarked entries).
  char winner(const std::vector<int>& marks);
  std::size_t states() const { return memo_.size(); }

 private:
  std::vector<int> perm_;
  std::unordered_map<std::uint64_t, char> memo_;
};

constexpr int kExactHintMaxN = 8;

struct Hint {
  int node = -1;
  char verdict = '?';   // eventual winner if the mover plays here
  bool heuristic = false;
  std::vector<std::string> flags;
};
std::vector<Hint> hints(const GameState& g, GameSolver* solver = nullptr);

char solve_game(const std::vector<int>& perm);

// Canonical ladder (1,3,2,5,4,...,n-2,n).
std::vector<int> ladder_perm(int n);
// B's reply to A's node by value pairing 2k <-> 2k+1.
int mirror_reply(const GameState& g, int a_node);

}  // namespace ribbon
