#include "ribbonlab/game.hpp"

#include <cstdlib>
#include <random>

#include "ribbonlab/enumeration.hpp"
#include "ribbonlab/solver.hpp"

namespace ribbon {

GameState new_game(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 4 || n > 12 || n % 2)
    throw GameError("BadN", "n must be even with 4 <= n <= 12");
  validate(perm, std::vector<int>(n, 1));
  GameState g;
  g.perm = canonicalize(new_ribbon(perm, std::vector<int>(n, 1))).values;
  g.marks.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (g.perm[i] == 1 || g.perm[i] == n) g.marks[i] = 1;
  g.pool_a = g.pool_b = n / 2 - 1;
  return g;
}

GameState new_game(int n, std::uint64_t seed) {
  if (n < 4 || n > 12 || n % 2)
    throw GameError("BadN", "n must be even with 4 <= n <= 12");
  std::mt19937_64 rng(seed);
  return new_game(random_zigzag(n, rng));
}

bool legal(const GameState& g, int node) {
  if (g.finished || node < 0 || node >= static_cast<int>(g.perm.size()))
    return false;
  if (g.marks[node] != 0) return false;
  return g.to_move == 'A' ? g.pool_a > 0 : g.pool_b > 0;
}

Ribbon final_ribbon(const GameState& g) { return Ribbon{g.perm, g.marks}; }

void play(GameState& g, int node) {
  if (!legal(g, node))
    throw GameError("NotYourTurnOrOccupied",
                    g.finished ? "game is finished" : "node is not available");
  g.history.push_back(node);
  if (g.to_move == 'A') {
    g.marks[node] = -1;
    --g.pool_a;
    g.to_move = 'B';
  } else {
    g.marks[node] = 1;
    --g.pool_b;
    g.to_move = 'A';
  }
  if (g.pool_a == 0 && g.pool_b == 0) {
    g.finished = true;
    g.gamma = invariant(final_ribbon(g), Kind::Gamma);
    g.winner = g.gamma == 0 ? 'B' : 'A';
  }
}

GameSolver::GameSolver(std::vector<int> perm) : perm_(std::move(perm)) {}

char GameSolver::winner(const std::vector<int>& marks) {
  std::uint64_t key = 0;
  int placed = 0;
  for (int m : marks) {
    key = key * 3 + static_cast<std::uint64_t>(m + 1);
    placed += m != 0;
  }
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const int n = static_cast<int>(perm_.size());
  char w;
  if (placed == n) {
    w = is_gamma_zero(Ribbon{perm_, marks}).zero ? 'B' : 'A';
  } else {
    // the two auto marks are not moves
    char mover = (placed - 2) % 2 == 0 ? 'A' : 'B';
    int sign = mover == 'A' ? -1 : 1;
    w = mover == 'A' ? 'B' : 'A';
    std::vector<int> next = marks;
    for (int i = 0; i < n && w != mover; ++i) {
      if (marks[i]) continue;
      next[i] = sign;
      if (winner(next) == mover) w = mover;
      next[i] = 0;
    }
  }
  memo_.emplace(key, w);
  return w;
}

std::vector<Hint> hints(const GameState& g, GameSolver* solver) {
  std::vector<Hint> out;
  if (g.finished) return out;
  const int n = static_cast<int>(g.perm.size());
  const int sign = g.to_move == 'A' ? -1 : 1;
  std::unique_ptr<GameSolver> own;
  if (n <= kExactHintMaxN && !solver) {
    own = std::make_unique<GameSolver>(g.perm);
    solver = own.get();
  }
  for (int i = 0; i < n; ++i) {
    if (!legal(g, i)) continue;
    Hint h;
    h.node = i;
    std::vector<int> m = g.marks;
    m[i] = sign;
    if (n <= kExactHintMaxN) {
      h.verdict = solver->winner(m);
    } else {
      h.heuristic = true;
      // a fresh adjacent opposite pair one level apart cancels away
      for (int j : {(i + 1) % n, (i + n - 1) % n})
        if (m[j] == -sign && std::abs(g.perm[i] - g.perm[j]) == 1)
          h.flags.push_back("short-pair");
      if (h.flags.empty()) h.flags.push_back("no-signal");
    }
    out.push_back(h);
  }
  return out;
}

char solve_game(const std::vector<int>& perm) {
  GameState g = new_game(perm);
  GameSolver s(g.perm);
  return s.winner(g.marks);
}

std::vector<int> ladder_perm(int n) {
  std::vector<int> v(n);
  v[0] = 1;
  for (int k = 1; 2 * k < n; ++k) {
    v[2 * k - 1] = 2 * k + 1;
    v[2 * k] = 2 * k;
  }
  v[n - 1] = n;
  return v;
}

int mirror_reply(const GameState& g, int a_node) {
  int v = g.perm[a_node];
  int w = v % 2 == 0 ? v + 1 : v - 1;
  for (int i = 0; i < static_cast<int>(g.perm.size()); ++i)
    if (g.perm[i] == w) return i;
  return -1;
}

}  // namespace ribbon
