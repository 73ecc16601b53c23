#include "ribbonlab/solver.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>

namespace ribbon {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Gamma: return "gamma";
    case Kind::Gamma0: return "gamma0";
    case Kind::GammaExt: return "ext";
    case Kind::GammaSad: return "sad";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "gamma" || s == "g") return Kind::Gamma;
  if (s == "gamma0" || s == "g0") return Kind::Gamma0;
  if (s == "ext" || s == "ge" || s == "gamma_ext") return Kind::GammaExt;
  if (s == "sad" || s == "gs" || s == "gamma_sad") return Kind::GammaSad;
  throw RibbonError(ErrorCode::ParseError, "unknown invariant kind '" + s + "'");
}

Weights alpha0_weights() { return {0, 0, 0, 0}; }
Weights touching_weights() { return {1, 1, 1, 0}; }
Weights alternation_weights(int n) { return {1, n / 2 - 1, 0, 1}; }

namespace {

Weights add(const Weights& a, const Weights& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

// Nodes from index `from` to `to` inclusive, walking forward.
void collect(const Ribbon& a, int from, int to, std::vector<int>& lv,
             std::vector<int>& mk) {
  for (int i = from;; i = a.next(i)) {
    lv.push_back(2 * a.values[i]);
    mk.push_back(a.marks[i]);
    if (i == to) break;
  }
}

Ribbon part_with_new_node(std::vector<int> lv, std::vector<int> mk, int tl) {
  lv.push_back(tl);
  mk.push_back(1);
  Ribbon r = relabel(lv, mk);
  validate(r.values, r.marks);
  return r;
}

int circle_pos(const Ribbon& a, int p, int arc) {
  return (arc - p + a.n()) % a.n();
}

bool has_negative(const Ribbon& a) {
  return std::find(a.marks.begin(), a.marks.end(), -1) != a.marks.end();
}

int cluster_count(const Ribbon& a) {
  int c = 0;
  for (int k = 1; k < a.n(); ++k)
    if (a.is_min(a.node_of_value(k)) && a.is_max(a.node_of_value(k + 1))) ++c;
  return c;
}

}  // namespace

std::pair<Ribbon, Ribbon> binary_split(const Ribbon& a, int tl, int i, int j) {
  if (i > j) std::swap(i, j);
  std::vector<int> l1, m1, l2, m2;
  collect(a, a.next(i), j, l1, m1);
  collect(a, a.next(j), i, l2, m2);
  return {part_with_new_node(l1, m1, tl), part_with_new_node(l2, m2, tl)};
}

bool ternary_valid(const Ribbon& a, int p, int i, int j) {
  auto cs = node_level_crossings(a, p);
  auto find = [&](int arc) -> const Crossing* {
    for (auto& c : cs)
      if (c.arc == arc) return &c;
    return nullptr;
  };
  const Crossing* x = find(i);
  const Crossing* y = find(j);
  if (!x || !y || circle_pos(a, p, i) >= circle_pos(a, p, j)) return false;
  bool pmax = a.is_max(p);
  return pmax ? (x->up && !y->up) : (!x->up && y->up);
}

std::array<Ribbon, 3> ternary_split(const Ribbon& a, int p, int i, int j) {
  if (!ternary_valid(a, p, i, j))
    throw RibbonError(ErrorCode::PreconditionViolated, "invalid ternary split");
  int tl = 2 * a.values[p];
  std::vector<int> l1, m1, l2, m2, l3, m3;
  collect(a, a.next(p), i, l1, m1);
  collect(a, a.next(i), j, l2, m2);
  collect(a, a.next(j), a.prev(p), l3, m3);
  return {part_with_new_node(l1, m1, tl), part_with_new_node(l2, m2, tl),
          part_with_new_node(l3, m3, tl)};
}

std::vector<int> cluster_gap_levels(const Ribbon& a) {
  std::vector<int> out;
  for (int k = 1; k < a.n(); ++k)
    if (a.is_max(a.node_of_value(k)) && a.is_min(a.node_of_value(k + 1)))
      out.push_back(2 * k + 1);
  return out;
}

Expansion expand(const Ribbon& input, int gap_choice) {
  Expansion e;
  e.reduced = short_cancel_all(input);
  const Ribbon& a = e.reduced;
  const int n = a.n();

  if (has_negative(a)) {
    int best = -1, best_c = std::numeric_limits<int>::max();
    for (int p = 0; p < n; ++p) {
      if (a.marks[p] > 0) continue;
      int c = static_cast<int>(node_level_crossings(a, p).size());
      if (c < best_c) best = p, best_c = c;
    }
    Candidate touch{SplitKind::Touching, {with_mark(a, best, 1)},
                    touching_weights(), best};
    e.candidates.push_back(touch);
    int v = a.values[best];
    if (v == 1 || v == n) return e;
    auto cs = node_level_crossings(a, best);
    std::sort(cs.begin(), cs.end(), [&](const Crossing& x, const Crossing& y) {
      return circle_pos(a, best, x.arc) < circle_pos(a, best, y.arc);
    });
    for (std::size_t s = 0; s < cs.size(); ++s)
      for (std::size_t t = s + 1; t < cs.size(); ++t) {
        if (!ternary_valid(a, best, cs[s].arc, cs[t].arc)) continue;
        auto parts = ternary_split(a, best, cs[s].arc, cs[t].arc);
        Candidate c{SplitKind::Ternary, {parts[0], parts[1], parts[2]}};
        c.node = best;
        c.twice_level = 2 * v;
        c.arc1 = cs[s].arc;
        c.arc2 = cs[t].arc;
        e.candidates.push_back(std::move(c));
      }
    return e;
  }

  if (cluster_count(a) == 1) {
    e.leaf = true;
    e.leaf_weights = n == 2 ? alpha0_weights() : alternation_weights(n);
    return e;
  }

  auto gaps = cluster_gap_levels(a);
  int tl;
  if (gap_choice >= 0) {
    tl = gaps.at(gap_choice);
  } else {
    tl = gaps[0];
    for (int g : gaps)
      if (crossing_count(a, g) < crossing_count(a, tl)) tl = g;
  }
  auto cs = crossings_at(a, tl);
  for (std::size_t s = 0; s < cs.size(); ++s)
    for (std::size_t t = s + 1; t < cs.size(); ++t) {
      if (cs[s].up == cs[t].up) continue;
      auto [p1, p2] = binary_split(a, tl, cs[s].arc, cs[t].arc);
      if (!lex_less(p1, a) || !lex_less(p2, a)) continue;
      Candidate c{SplitKind::Binary, {p1, p2}};
      c.twice_level = tl;
      c.arc1 = cs[s].arc;
      c.arc2 = cs[t].arc;
      e.candidates.push_back(std::move(c));
    }
  return e;
}

Weights Solver::weights(const Ribbon& input) {
  Ribbon a = short_cancel_all(input);
  RibbonKey key = key_of(a);
  {
    std::shared_lock lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Expansion e = expand(a);
  Weights best;
  if (e.leaf) {
    best = e.leaf_weights;
  } else {
    if (e.candidates.empty())
      throw RibbonError(ErrorCode::InternalNoCandidate,
                        "no splitting candidate for " + to_string(a));
    best.fill(std::numeric_limits<int>::max());
    for (const auto& c : e.candidates) {
      Weights w = c.extra;
      for (const auto& part : c.parts) w = add(w, weights(part));
      for (int k = 0; k < 4; ++k) best[k] = std::min(best[k], w[k]);
    }
  }
  std::unique_lock lk(mu_);
  memo_.emplace(key, best);
  return best;
}

std::vector<Weights> Solver::weights_all_gaps(const Ribbon& input) {
  Ribbon a = short_cancel_all(input);
  std::vector<Weights> out;
  Expansion top = expand(a);
  if (top.leaf || !is_positive(a)) {
    out.push_back(weights(a));
    return out;
  }
  auto gaps = cluster_gap_levels(a);
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    Expansion e = expand(a, static_cast<int>(g));
    Weights best;
    best.fill(std::numeric_limits<int>::max());
    for (const auto& c : e.candidates) {
      Weights w = c.extra;
      for (const auto& part : c.parts) w = add(w, weights(part));
      for (int k = 0; k < 4; ++k) best[k] = std::min(best[k], w[k]);
    }
    out.push_back(best);
  }
  return out;
}

std::size_t Solver::size() const {
  std::shared_lock lk(mu_);
  return memo_.size();
}

void Solver::clear() {
  std::unique_lock lk(mu_);
  memo_.clear();
}

void Solver::insert(const Ribbon& a, const Weights& w) {
  std::unique_lock lk(mu_);
  memo_[key_of(a)] = w;
}

std::size_t Solver::load(std::istream& in, bool recheck,
                         std::size_t* mismatches) {
  std::size_t loaded = 0, bad = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string notation, f[4];
    ls >> notation >> f[0] >> f[1] >> f[2] >> f[3];
    static const char* prefix[4] = {"g=", "g0=", "ge=", "gs="};
    Weights w;
    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      std::string p = prefix[k];
      ok = f[k].rfind(p, 0) == 0;
      if (ok) w[k] = std::stoi(f[k].substr(p.size()));
    }
    if (!ok) throw RibbonError(ErrorCode::ParseError, "bad cache line: " + line);
    Ribbon a = short_cancel_all(parse_ribbon(notation));
    if (recheck) {
      Weights fresh = weights(a);
      if (fresh != w) ++bad;
    } else {
      insert(a, w);
    }
    ++loaded;
  }
  if (mismatches) *mismatches = bad;
  return loaded;
}

std::vector<std::pair<Ribbon, Weights>> Solver::snapshot() const {
  std::shared_lock lk(mu_);
  std::vector<std::pair<Ribbon, Weights>> out;
  out.reserve(memo_.size());
  for (const auto& [k, w] : memo_) {
    Ribbon r;
    for (std::uint32_t i = 0; i < k.n; ++i) {
      r.values.push_back(static_cast<int>((k.values >> (4 * i)) & 15) + 1);
      r.marks.push_back((k.marks >> i) & 1 ? -1 : 1);
    }
    out.emplace_back(std::move(r), w);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  return out;
}

void Solver::save(std::ostream& out) const {
  for (const auto& [r, w] : snapshot())
    out << to_string(r) << " g=" << w[0] << " g0=" << w[1] << " ge=" << w[2]
        << " gs=" << w[3] << '\n';
}

Solver& default_solver() {
  static Solver s;
  return s;
}

int invariant(const Ribbon& a, Kind k) {
  return default_solver().invariant(a, k);
}

TraceNode solve_trace(const Ribbon& a, Kind k) {
  const int ki = static_cast<int>(k);
  Solver& s = default_solver();
  TraceNode t;
  t.input = a;
  Expansion e = expand(a);
  t.reduced = e.reduced;
  t.value = s.weights(a)[ki];
  if (e.leaf) {
    t.kind = SplitKind::Leaf;
    t.weight = e.leaf_weights[ki];
    return t;
  }
  for (const auto& c : e.candidates) {
    int w = c.extra[ki];
    for (const auto& part : c.parts) w += s.weights(part)[ki];
    if (w != t.value) continue;
    t.kind = c.kind;
    t.weight = c.extra[ki];
    t.node = c.node;
    t.twice_level = c.twice_level;
    t.arc1 = c.arc1;
    t.arc2 = c.arc2;
    for (const auto& part : c.parts) t.children.push_back(solve_trace(part, k));
    return t;
  }
  throw RibbonError(ErrorCode::InternalNoCandidate, "trace lost the minimizer");
}

int replay(const TraceNode& t) {
  int w = t.weight;
  for (const auto& c : t.children) w += replay(c);
  return w;
}

std::string trace_to_string(const TraceNode& t, int indent) {
  std::ostringstream os;
  os << std::string(indent * 2, ' ');
  auto level = [](int tl) {
    return tl % 2 ? std::to_string(tl / 2) + ".5" : std::to_string(tl / 2);
  };
  switch (t.kind) {
    case SplitKind::Leaf: os << "leaf"; break;
    case SplitKind::Touching: os << "touching node=" << t.node; break;
    case SplitKind::Binary:
      os << "binary level=" << level(t.twice_level) << " arcs=" << t.arc1 << ","
         << t.arc2;
      break;
    case SplitKind::Ternary:
      os << "ternary node=" << t.node << " arcs=" << t.arc1 << "," << t.arc2;
      break;
  }
  os << " " << to_string(t.reduced) << " value=" << t.value;
  if (t.weight) os << " weight=" << t.weight;
  os << '\n';
  for (const auto& c : t.children) os << trace_to_string(c, indent + 1);
  return os.str();
}

std::vector<ValuePair> clusters(const Ribbon& a) {
  std::vector<ValuePair> out;
  for (int k = 1; k < a.n(); ++k)
    if (a.is_min(a.node_of_value(k)) && a.is_max(a.node_of_value(k + 1)))
      out.push_back({k, k + 1});
  return out;
}

int stab_number(std::vector<ValuePair> iv) {
  std::sort(iv.begin(), iv.end(),
            [](const ValuePair& x, const ValuePair& y) { return x.hi < y.hi; });
  int count = 0, last = std::numeric_limits<int>::min();
  for (const auto& x : iv)
    if (x.lo > last) {
      last = x.hi;
      ++count;
    }
  return count;
}

int delta(const Ribbon& a) {
  if (a.n() == 2) return 0;
  std::vector<ValuePair> iv;
  for (int i = 0; i < a.n(); ++i)
    iv.push_back({std::min(a.values[i], a.values[a.next(i)]),
                  std::max(a.values[i], a.values[a.next(i)])});
  return stab_number(iv);
}

int delta0(const Ribbon& a) {
  if (a.n() == 2) return 0;
  std::vector<ValuePair> iv;
  for (int i = 0; i < a.n(); ++i) {
    int j = a.next(i);
    if (a.marks[i] < 0 || a.marks[j] < 0) continue;
    int lo = std::min(a.values[i], a.values[j]);
    int hi = std::max(a.values[i], a.values[j]);
    bool clean = true;
    for (int p = 0; p < a.n(); ++p)
      if (a.marks[p] < 0 && lo < a.values[p] && a.values[p] < hi) clean = false;
    if (clean) iv.push_back({lo, hi});
  }
  return stab_number(iv);
}

InvariantBundle invariant_bundle(const Ribbon& a) {
  InvariantBundle b;
  Weights w = default_solver().weights(a);
  b.n = a.n();
  b.gamma = w[0];
  b.gamma0 = w[1];
  b.gamma_ext = w[2];
  b.gamma_sad = w[3];
  b.sigma = signature(a);
  b.index = index_of(a);
  b.delta = delta(a);
  b.delta0 = delta0(a);
  b.touching = (b.n - b.sigma) / 2 - b.gamma_ext;
  b.beta_exact = is_positive(a);
  b.beta_lower = b.delta0;
  b.beta_upper = b.beta_exact ? b.delta : b.gamma;
  return b;
}

std::vector<Verdict> check_bounds(const InvariantBundle& b, int n,
                                  bool positive, bool negative) {
  const int g = b.gamma, s = b.sigma;
  std::vector<Verdict> v;
  auto add = [&](const char* name, bool ok) { v.push_back({name, ok}); };
  add("gamma-range", 0 <= g && g <= n / 2 + 1);
  add("gamma-index-lower", 1 - s / 2 <= g);
  add("gamma-upper", g <= n - 1 - s / 2);
  add("touching-upper", g <= n - 1 - s / 2 - 2 * b.touching);
  add("touching-nonneg", b.touching >= 0);
  add("gamma-ge-delta0", g >= b.delta0);
  add("gamma-ge-delta-positive", !positive || g >= b.delta);
  add("gamma0-abs-index", b.gamma0 >= std::abs(1 - s / 2));
  add("gamma0-parity", ((b.gamma0 - (1 - s / 2)) % 2 + 2) % 2 == 0);
  add("gamma0-ge-gamma", b.gamma0 >= g);
  add("gamma-ge-ext-plus-sad", g >= b.gamma_ext + b.gamma_sad);
  add("ext-index-lower", b.gamma_ext >= 1 - s / 2);
  add("sad-lower", b.gamma_sad >= b.delta0 + (s - n) / 2);
  add("sad-sandwich-lower", 1 - s / 2 + b.gamma_sad <= g);
  add("ext-sandwich-upper", g <= -1 + s / 2 + 2 * b.gamma_ext);
  add("zero-needs-sigma2", g != 0 || s == 2);
  add("no-sigma2-gamma1", !(s == 2 && g == 1));
  add("no-negative-sigma-extreme", !(s < 0 && g == 2 - s / 2));
  add("negative-values",
      !negative || (g == n / 2 + 1 && b.gamma0 == g && b.gamma_ext == g));
  add("positive-values",
      !positive || (g <= std::max(0, n / 2 - 1) && b.gamma0 == std::max(0, n / 2 - 1)));
  add("beta-bounds", b.beta_lower <= b.beta_upper && b.beta_upper <= g);
  return v;
}

namespace {

struct ZeroSearch {
  std::unordered_map<RibbonKey, bool, RibbonKeyHash> memo;

  bool run(const Ribbon& a, std::vector<Ribbon>* chain,
           std::vector<NodePair>* steps) {
    if (a.n() == 2) return a.marks[0] > 0 && a.marks[1] > 0;
    // a negative global extremum forces an interior extremum
    if (a.marks[a.node_of_value(1)] < 0 || a.marks[a.node_of_value(a.n())] < 0)
      return false;
    RibbonKey k = key_of(a);
    if (!chain) {
      auto it = memo.find(k);
      if (it != memo.end()) return it->second;
    }
    bool ok = false;
    for (const auto& pq : cancellable_pairs(a)) {
      Ribbon b = remove_pair(a, pq.p, pq.q);
      if (!run(b, nullptr, nullptr)) continue;
      ok = true;
      if (chain) {
        steps->push_back(pq);
        chain->push_back(b);
        run(b, chain, steps);
      }
      break;
    }
    memo[k] = ok;
    return ok;
  }
};

}  // namespace

ZeroResult is_gamma_zero(const Ribbon& input) {
  ZeroResult r;
  Ribbon a = canonicalize(input);
  if (signature(a) != 2) {
    r.reason = "signature";
    return r;
  }
  ZeroSearch s;
  std::vector<Ribbon> chain{a};
  std::vector<NodePair> steps;
  if (s.run(a, &chain, &steps)) {
    r.zero = true;
    r.chain = std::move(chain);
    r.steps = std::move(steps);
  } else {
    bool ext = a.marks[a.node_of_value(1)] < 0 ||
               a.marks[a.node_of_value(a.n())] < 0;
    r.reason = ext ? "negative-extreme" : "no-cancellation-chain";
  }
  return r;
}

namespace {

std::vector<int> canonical_ladder_values(int n) {
  std::vector<int> v(n);
  v[0] = 1;
  for (int k = 1; k < n / 2; ++k) {
    v[2 * k - 1] = 2 * k + 1;
    v[2 * k] = 2 * k;
  }
  v[n - 1] = n;
  return v;
}

// Node index of p_1..p_n, or empty if a is not the canonical ladder.
std::vector<int> ladder_labels(const Ribbon& a) {
  const int n = a.n();
  if (n < 4) return {};
  auto want = canonical_ladder_values(n);
  std::vector<int> fwd(n), bwd(n);
  for (int k = 0; k < n; ++k) {
    fwd[k] = k;
    bwd[k] = (n - k) % n;
  }
  for (const auto& lab : {fwd, bwd}) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = a.values[lab[k]] == want[k];
    if (ok) return lab;
  }
  return {};
}

}  // namespace

bool is_canonical_ladder(const Ribbon& a) { return !ladder_labels(a).empty(); }

int ladder_closed_form(const Ribbon& a, Kind k) {
  auto lab = ladder_labels(a);
  if (lab.empty())
    throw RibbonError(ErrorCode::NotCanonicalLadder, "not a canonical ladder");
  const int n = a.n();
  if (a.marks[lab[0]] < 0 || a.marks[lab[n - 1]] < 0)
    throw RibbonError(ErrorCode::PreconditionViolated,
                      "ladder extremes must be positive");
  auto nu = [&](int label) { return a.marks[lab[label - 1]]; };
  int count = 0;
  for (int j = 1; j <= n / 2 - 1; ++j) {
    int x = nu(2 * j), y = nu(2 * j + 1);
    if (x * y <= 0) continue;
    if (k == Kind::GammaExt && x > 0) continue;
    if (k == Kind::GammaSad && x < 0) continue;
    ++count;
  }
  return count;
}

int cl_plus_plus(const Ribbon& a) {
  int c = 0;
  for (int k = 1; k < a.n(); ++k) {
    int p = a.node_of_value(k), q = a.node_of_value(k + 1);
    if (a.is_max(p) && a.is_min(q) && a.marks[p] > 0 && a.marks[q] > 0) ++c;
  }
  return c;
}

int primary_xi(const Ribbon& a, int node) {
  if (a.marks[node] < 0) return 0;
  int v = a.values[node];
  for (int k : {v - 1, v}) {
    if (k < 1 || k + 1 > a.n()) continue;
    int p = a.node_of_value(k), q = a.node_of_value(k + 1);
    if (a.is_max(p) && a.is_min(q) && a.marks[p] > 0 && a.marks[q] > 0) return 1;
  }
  return 0;
}

SphereBounds sphere_lower_bounds(const Ribbon& a) {
  Ribbon b = mark_flip_all(a);
  auto& s = default_solver();
  return {s.invariant(a, Kind::Gamma) + s.invariant(b, Kind::Gamma),
          s.invariant(a, Kind::Gamma0) + s.invariant(b, Kind::Gamma0)};
}

}  // namespace ribbon
