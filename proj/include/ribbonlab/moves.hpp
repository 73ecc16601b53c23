#pragma once

#include <string>
#include <vector>

#include "ribbonlab/core.hpp"

namespace ribbon {

enum class MoveKind { Meeting, Separation, Bypass, Birth, Death, Flip };

const char* move_kind_name(MoveKind k);

struct Move {
  MoveKind kind;
  int p = -1, q = -1;   // node operands
  int arc = -1;         // Birth: insertion arc
  int gap = -1;         // Birth: new values are gap+1, gap+2
  int first_mark = 1;   // Birth: mark of the node inserted first along the arc
};

bool move_applicable(const Ribbon& a, const Move& m);
Ribbon apply_move(const Ribbon& a, const Move& m);
// Every applicable move, deterministic order.
std::vector<Move> all_moves(const Ribbon& a);

// Jump-table class 'a'..'j' of an applicable move.
char jump_class(const Ribbon& a, const Move& m);
// Allowed jumps of the class.
std::vector<int> jump_set(char cls);

}  // namespace ribbon
