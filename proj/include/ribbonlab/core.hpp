#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace ribbon {

using Rational = boost::rational<long long>;

enum class ErrorCode {
  NotPermutation,
  OddLength,
  NotZigZag,
  BadMark,
  DuplicateLevel,
  NotCancellable,
  MoveNotApplicable,
  PreconditionViolated,
  LevelCollision,
  NotCanonicalLadder,
  ParseError,
  LimitExceeded,
  InfeasibleSigma,
  InternalNoCandidate,
};

const char* error_name(ErrorCode c);

struct RibbonError : std::runtime_error {
  ErrorCode code;
  RibbonError(ErrorCode c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
};

// A marked cyclic zig-zag permutation. Stored canonically: value 1 at index 0,
// so even indices are minima and odd indices maxima.
struct Ribbon {
  std::vector<int> values;
  std::vector<int> marks;  // +1 or -1

  int n() const { return static_cast<int>(values.size()); }
  int next(int i) const { return i + 1 == n() ? 0 : i + 1; }
  int prev(int i) const { return i == 0 ? n() - 1 : i - 1; }
  bool is_max(int i) const { return values[i] > values[next(i)]; }
  bool is_min(int i) const { return !is_max(i); }
  int node_of_value(int v) const;

  bool operator==(const Ribbon&) const = default;
};

// Validating constructor; canonicalizes.
Ribbon new_ribbon(std::vector<int> values, std::vector<int> marks);
// Same checks without rotating (used internally by constructions).
void validate(const std::vector<int>& values, const std::vector<int>& marks);
Ribbon canonicalize(const Ribbon& a);
// Relabels arbitrary distinct integers to ranks 1..n, then canonicalizes.
Ribbon relabel(const std::vector<int>& levels, const std::vector<int>& marks);

struct RigidRibbon {
  std::vector<Rational> levels;
  std::vector<int> marks;
};
Ribbon from_levels(const RigidRibbon& r);

Ribbon alpha0();

int signature(const Ribbon& a);
int index_of(const Ribbon& a);
int positives(const Ribbon& a);

// Lex order on (n, values, marks) with +1 before -1.
std::strong_ordering lex_compare(const Ribbon& a, const Ribbon& b);
inline bool lex_less(const Ribbon& a, const Ribbon& b) {
  return lex_compare(a, b) < 0;
}

Ribbon mark_flip_all(const Ribbon& a);
Ribbon invert(const Ribbon& a);
Ribbon with_mark(const Ribbon& a, int node, int mark);

struct Crossing {
  int arc;   // arc i joins node i and node i+1
  bool up;   // values[i] < values[i+1]
  bool operator==(const Crossing&) const = default;
};

// Arcs straddling the level twice_level/2, in circle order.
std::vector<Crossing> crossings_at(const Ribbon& a, int twice_level);
// Half-integer level k + 1/2.
std::vector<Crossing> crossings(const Ribbon& a, int k);
std::vector<Crossing> node_level_crossings(const Ribbon& a, int p);
int crossing_count(const Ribbon& a, int twice_level);

Ribbon remove_pair(const Ribbon& a, int p, int q);
Ribbon short_cancel_all(const Ribbon& a);

struct NodePair {
  int p, q;
  bool operator==(const NodePair&) const = default;
};
std::vector<NodePair> short_cancellable_pairs(const Ribbon& a);
// (p negative, q positive, adjacent, level-gap condition holds).
std::vector<NodePair> cancellable_pairs(const Ribbon& a);
bool is_cancellable(const Ribbon& a, int p, int q);
Ribbon cancel(const Ribbon& a, int p, int q);

bool is_positive(const Ribbon& a);
bool is_negative(const Ribbon& a);
bool is_ladder(const Ribbon& a);
bool is_alternation(const Ribbon& a);

// Text notation "(1+,6+,2-,4+,3+,5-)".
std::string to_string(const Ribbon& a);
Ribbon parse_ribbon(const std::string& text);
// Accepts either the text notation or a JSON object {"values":..,"marks":..}.
Ribbon parse_any(const std::string& text);

// Compact key used for memo tables; valid for n <= 16.
struct RibbonKey {
  std::uint64_t values = 0;
  std::uint32_t marks = 0;
  std::uint32_t n = 0;
  bool operator==(const RibbonKey&) const = default;
};
RibbonKey key_of(const Ribbon& a);
struct RibbonKeyHash {
  std::size_t operator()(const RibbonKey& k) const {
    std::uint64_t h = k.values * 0x9E3779B97F4A7C15ull;
    h ^= (std::uint64_t(k.marks) << 8 | k.n) + 0x632BE59BD9B4E019ull + (h << 6) +
         (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Weak profiles: cyclic extremum levels with ties allowed between
// non-adjacent entries.
struct WeakProfile {
  std::vector<Rational> levels;
};
void validate_profile(const WeakProfile& w);
std::pair<int, int> profile_counts(const WeakProfile& w);
bool is_rolle(const WeakProfile& w);

}  // namespace ribbon
