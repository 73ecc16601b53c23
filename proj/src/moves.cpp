#include "ribbonlab/moves.hpp"

#include <algorithm>

namespace ribbon {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Meeting: return "meeting";
    case MoveKind::Separation: return "separation";
    case MoveKind::Bypass: return "bypass";
    case MoveKind::Birth: return "birth";
    case MoveKind::Death: return "death";
    case MoveKind::Flip: return "flip";
  }
  return "?";
}

namespace {

bool valid_node(const Ribbon& a, int i) { return i >= 0 && i < a.n(); }

bool adjacent(const Ribbon& a, int p, int q) {
  return a.next(p) == q || a.prev(p) == q;
}

// p holds k, q holds k+1.
bool swap_shape(const Ribbon& a, const Move& m, bool p_max, bool q_max) {
  if (!valid_node(a, m.p) || !valid_node(a, m.q) || m.p == m.q) return false;
  if (a.values[m.q] != a.values[m.p] + 1) return false;
  return a.is_max(m.p) == p_max && a.is_max(m.q) == q_max;
}

}  // namespace

bool move_applicable(const Ribbon& a, const Move& m) {
  switch (m.kind) {
    case MoveKind::Meeting:
      return swap_shape(a, m, true, false) && !adjacent(a, m.p, m.q);
    case MoveKind::Separation:
      return swap_shape(a, m, false, true) && !adjacent(a, m.p, m.q);
    case MoveKind::Bypass:
      return swap_shape(a, m, true, true) || swap_shape(a, m, false, false);
    case MoveKind::Birth: {
      if (!valid_node(a, m.arc) || (m.first_mark != 1 && m.first_mark != -1))
        return false;
      int lo = std::min(a.values[m.arc], a.values[a.next(m.arc)]);
      int hi = std::max(a.values[m.arc], a.values[a.next(m.arc)]);
      return lo <= m.gap && m.gap < hi;
    }
    case MoveKind::Death: {
      if (!valid_node(a, m.p) || !valid_node(a, m.q) || a.n() < 4) return false;
      return a.next(m.p) == m.q && a.marks[m.p] != a.marks[m.q] &&
             std::abs(a.values[m.p] - a.values[m.q]) == 1;
    }
    case MoveKind::Flip:
      return valid_node(a, m.p);
  }
  return false;
}

Ribbon apply_move(const Ribbon& a, const Move& m) {
  if (!move_applicable(a, m))
    throw RibbonError(ErrorCode::MoveNotApplicable,
                      std::string(move_kind_name(m.kind)) + " not applicable");
  Ribbon r = a;
  switch (m.kind) {
    case MoveKind::Meeting:
    case MoveKind::Separation:
    case MoveKind::Bypass:
      std::swap(r.values[m.p], r.values[m.q]);
      break;
    case MoveKind::Birth: {
      bool rising = a.values[m.arc] < a.values[a.next(m.arc)];
      for (int& v : r.values)
        if (v > m.gap) v += 2;
      int first = rising ? m.gap + 2 : m.gap + 1;
      int second = rising ? m.gap + 1 : m.gap + 2;
      r.values.insert(r.values.begin() + m.arc + 1, {first, second});
      r.marks.insert(r.marks.begin() + m.arc + 1, {m.first_mark, -m.first_mark});
      break;
    }
    case MoveKind::Death:
      return remove_pair(a, m.p, m.q);
    case MoveKind::Flip:
      r.marks[m.p] = -r.marks[m.p];
      break;
  }
  validate(r.values, r.marks);
  return canonicalize(r);
}

std::vector<Move> all_moves(const Ribbon& a) {
  std::vector<Move> out;
  const int n = a.n();
  for (int k = 1; k < n; ++k) {
    int p = a.node_of_value(k), q = a.node_of_value(k + 1);
    for (MoveKind kind :
         {MoveKind::Meeting, MoveKind::Separation, MoveKind::Bypass}) {
      Move m{kind, p, q};
      if (move_applicable(a, m)) out.push_back(m);
    }
  }
  for (int i = 0; i < n; ++i) {
    int lo = std::min(a.values[i], a.values[a.next(i)]);
    int hi = std::max(a.values[i], a.values[a.next(i)]);
    for (int g = lo; g < hi; ++g)
      for (int fm : {1, -1}) {
        Move m{MoveKind::Birth};
        m.arc = i;
        m.gap = g;
        m.first_mark = fm;
        out.push_back(m);
      }
  }
  for (int i = 0; i < n; ++i) {
    Move m{MoveKind::Death, i, a.next(i)};
    if (move_applicable(a, m)) out.push_back(m);
  }
  for (int i = 0; i < n; ++i) out.push_back(Move{MoveKind::Flip, i});
  return out;
}

// In a bypass the moving node is the one that leaves the middle of the two
// levels: the lower of two maxima rises past the other, the higher of two
// minima sinks past the other. This reading is symmetric under inversion.
char jump_class(const Ribbon& a, const Move& m) {
  switch (m.kind) {
    case MoveKind::Meeting:
    case MoveKind::Separation: {
      int s = a.marks[m.p] + a.marks[m.q];
      bool meet = m.kind == MoveKind::Meeting;
      if (s == 2) return meet ? 'a' : 'b';
      if (s == -2) return 'c';
      return meet ? 'd' : 'e';
    }
    case MoveKind::Bypass: {
      if (a.marks[m.p] == a.marks[m.q]) return 'f';
      int mover = a.is_max(m.p) ? m.p : m.q;
      return a.marks[mover] > 0 ? 'g' : 'h';
    }
    case MoveKind::Birth:
    case MoveKind::Death:
      return 'i';
    case MoveKind::Flip:
      return 'j';
  }
  return '?';
}

std::vector<int> jump_set(char cls) {
  switch (cls) {
    case 'a': return {0, -1};
    case 'b': return {0, 1};
    case 'c': return {0};
    case 'd': return {0, -1, -2};
    case 'e': return {0, 1, 2};
    case 'f': return {0};
    case 'g': return {0, -1, -2};
    case 'h': return {0, 1, 2};
    case 'i': return {0};
    case 'j': return {0, -1, 1};
  }
  return {};
}

}  // namespace ribbon
