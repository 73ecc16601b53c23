#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ribbonlab/core.hpp"

namespace ribbon {

enum class Kind { Gamma = 0, Gamma0 = 1, GammaExt = 2, GammaSad = 3 };
constexpr std::array<Kind, 4> kAllKinds = {Kind::Gamma, Kind::Gamma0,
                                           Kind::GammaExt, Kind::GammaSad};
const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

// Indexed by Kind.
using Weights = std::array<int, 4>;

// Weight of alpha_0, of a touching circle at a negative extreme node, and of
// an alternation with n nodes.
Weights alpha0_weights();
Weights touching_weights();
Weights alternation_weights(int n);

enum class SplitKind { Leaf, Touching, Binary, Ternary };

// One way of reducing a ribbon: its invariant is sum(parts) + extra.
struct Candidate {
  SplitKind kind;
  std::vector<Ribbon> parts;
  Weights extra{0, 0, 0, 0};
  int node = -1;         // Touching/Ternary: node index in the reduced ribbon
  int twice_level = 0;   // Binary/Ternary: doubled cut level
  int arc1 = -1, arc2 = -1;
};

struct Expansion {
  Ribbon reduced;                   // after short cancellation
  bool leaf = false;
  Weights leaf_weights{0, 0, 0, 0};
  std::vector<Candidate> candidates;
};

// gap_choice < 0 picks the thinnest cluster gap; otherwise the index into the
// list of admissible gaps (used to check choice independence).
Expansion expand(const Ribbon& a, int gap_choice = -1);
// Admissible doubled levels between adjacent clusters of an all-positive
// ribbon.
std::vector<int> cluster_gap_levels(const Ribbon& a);

// Binary split at doubled level `tl` along crossings on arcs i and j.
std::pair<Ribbon, Ribbon> binary_split(const Ribbon& a, int tl, int i, int j);
// Ternary split at node p along crossings on arcs i and j (circle order from
// p); returns nothing if the pair is not realizable.
bool ternary_valid(const Ribbon& a, int p, int i, int j);
std::array<Ribbon, 3> ternary_split(const Ribbon& a, int p, int i, int j);

class Solver {
 public:
  Weights weights(const Ribbon& a);
  int invariant(const Ribbon& a, Kind k) {
    return weights(a)[static_cast<int>(k)];
  }
  // Evaluate with an explicit cluster-gap choice at the top level.
  std::vector<Weights> weights_all_gaps(const Ribbon& a);

  std::size_t size() const;
  void clear();
  void insert(const Ribbon& canonical_reduced, const Weights& w);
  // Cache file: "<notation> g=.. g0=.. ge=.. gs=.." per line.
  std::size_t load(std::istream& in, bool recheck, std::size_t* mismatches);
  void save(std::ostream& out) const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<RibbonKey, Weights, RibbonKeyHash> memo_;
  std::vector<std::pair<Ribbon, Weights>> snapshot() const;
};

Solver& default_solver();
int invariant(const Ribbon& a, Kind k);

struct TraceNode {
  Ribbon input;
  Ribbon reduced;
  SplitKind kind = SplitKind::Leaf;
  int value = 0;      // invariant of this subtree for the traced kind
  int weight = 0;     // local weight (leaf weight or touching weight)
  int node = -1, twice_level = 0, arc1 = -1, arc2 = -1;
  std::vector<TraceNode> children;
};
TraceNode solve_trace(const Ribbon& a, Kind k);
int replay(const TraceNode& t);
std::string trace_to_string(const TraceNode& t, int indent = 0);

struct ValuePair {
  int lo, hi;
};
std::vector<ValuePair> clusters(const Ribbon& a);
int delta(const Ribbon& a);
int delta0(const Ribbon& a);
// Greedy stabbing number of closed integer intervals.
int stab_number(std::vector<ValuePair> iv);

struct InvariantBundle {
  int gamma = 0, gamma0 = 0, gamma_ext = 0, gamma_sad = 0;
  int sigma = 0, index = 0;
  int delta = 0, delta0 = 0;
  int touching = 0;
  int beta_lower = 0, beta_upper = 0;
  bool beta_exact = false;
  int n = 0;
};
InvariantBundle invariant_bundle(const Ribbon& a);

struct Verdict {
  std::string name;
  bool pass;
};
std::vector<Verdict> check_bounds(const InvariantBundle& b, int n,
                                  bool positive, bool negative);

struct ZeroResult {
  bool zero = false;
  std::string reason;            // refutation tag when false
  std::vector<Ribbon> chain;     // a = chain[0] -> ... -> alpha_0
  std::vector<NodePair> steps;   // cancelled (p, q) at each step
};
ZeroResult is_gamma_zero(const Ribbon& a);

bool is_canonical_ladder(const Ribbon& a);
int ladder_closed_form(const Ribbon& a, Kind k);

int cl_plus_plus(const Ribbon& a);
int primary_xi(const Ribbon& a, int node);

struct SphereBounds {
  int general, morse;
};
SphereBounds sphere_lower_bounds(const Ribbon& a);

}  // namespace ribbon
