#include "ribbonlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "ribbonlab/enumeration.hpp"
#include "ribbonlab/game.hpp"
#include "ribbonlab/moves.hpp"
#include "ribbonlab/packing.hpp"
#include "ribbonlab/semigroup.hpp"
#include "ribbonlab/solver.hpp"

namespace ribbon {

namespace {

constexpr std::size_t kFailureCap = 200;

// Per-worker accumulator.
struct Sink {
  std::vector<Failure> failures;
  std::uint64_t failure_count = 0;
  std::uint64_t cases = 0;
  std::set<std::string> seen;  // suite-specific attained tags

  void fail(const Ribbon& a, const std::string& clause) {
    ++failure_count;
    failures.push_back({a, clause});
  }
  void fail(const std::string& clause) {
    ++failure_count;
    failures.push_back({std::nullopt, clause});
  }
  void check(bool ok, const Ribbon& a, const std::string& clause) {
    if (!ok) fail(a, clause);
  }
  void merge(Sink&& o) {
    failure_count += o.failure_count;
    cases += o.cases;
    for (auto& f : o.failures) failures.push_back(std::move(f));
    seen.insert(o.seen.begin(), o.seen.end());
  }
};

bool failure_less(const Failure& x, const Failure& y) {
  if (x.ribbon.has_value() != y.ribbon.has_value()) return !x.ribbon.has_value();
  if (x.ribbon) {
    auto c = lex_compare(*x.ribbon, *y.ribbon);
    if (c != 0) return c < 0;
  }
  return x.clause < y.clause;
}

using Body = std::function<void(const Ribbon&, Sink&)>;

// Runs body over ribbons on `jobs` threads; merge order does not matter
// because failures are sorted afterwards.
void run_all(const std::vector<Ribbon>& rs, int jobs, Sink& out, const Body& body) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(rs.size())));
  std::vector<Sink> sinks(jobs);
  auto work = [&](int t) {
    for (std::size_t i = t; i < rs.size(); i += jobs) {
      ++sinks[t].cases;
      try {
        body(rs[i], sinks[t]);
      } catch (const std::exception& e) {
        sinks[t].fail(rs[i], std::string("exception: ") + e.what());
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> th;
    for (int t = 0; t < jobs; ++t) th.emplace_back(work, t);
    for (auto& x : th) x.join();
  }
  for (auto& s : sinks) out.merge(std::move(s));
}

std::vector<Ribbon> samples(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Ribbon> out;
  for (int i = 0; i < count; ++i)
    out.push_back(canonicalize(random_ribbon(n, std::nullopt, rng)));
  return out;
}

std::vector<Ribbon> corpus(int n_max) { return ribbons_up_to(n_max); }

std::string wstr(const Weights& w) {
  std::ostringstream o;
  o << w[0] << "," << w[1] << "," << w[2] << "," << w[3];
  return o.str();
}

Ribbon R(const std::string& s) { return parse_ribbon(s); }

// ---------------------------------------------------------------- suites

void base_values(int n_max, Sink& s) {
  auto& S = default_solver();
  auto expect = [&](const Ribbon& a, Kind k, int v, const char* what) {
    ++s.cases;
    int got = S.invariant(a, k);
    if (got != v)
      s.fail(a, std::string(what) + ": " + kind_name(k) + "=" +
                    std::to_string(got) + " expected " + std::to_string(v));
  };
  expect(R("(1+,2+)"), Kind::Gamma, 0, "n=2 base");
  expect(R("(1+,2-)"), Kind::Gamma, 1, "n=2 base");
  expect(R("(1-,2+)"), Kind::Gamma, 1, "n=2 base");
  expect(R("(1-,2-)"), Kind::Gamma, 2, "n=2 base");
  Ribbon ex = R("(1+,6+,2-,4+,3+,5-)");
  expect(ex, Kind::Gamma, 2, "six-node example");
  expect(ex, Kind::Gamma0, 2, "six-node example");
  expect(ex, Kind::GammaExt, 1, "six-node example");
  expect(ex, Kind::GammaSad, 1, "six-node example");
  for (const auto& a : ribbons(4, {RibbonFilter::Negative}))
    expect(a, Kind::Gamma, 3, "all-negative n=4");
  expect(R("(1+,3+,2+,5+,4+,7+,6-,9+,8+,10+)"), Kind::Gamma, 3, "ten-node ladder");
  Ribbon e1 = R("(1-,5+,3+,6+,2-,7+,4+,8+)");
  expect(e1, Kind::Gamma, 3, "extrema example");
  expect(e1, Kind::Gamma0, 3, "extrema example");
  expect(e1, Kind::GammaExt, 1, "extrema example");
  expect(e1, Kind::GammaSad, 1, "extrema example");
  expect(R("(1-,3-,2-,4-)"), Kind::Gamma, 3, "all-negative n=4");
  for (int n = 4; n <= std::max(n_max, 4); n += 2) {
    for_each_ribbon(n, {RibbonFilter::Positive}, [&](const Ribbon& a) {
      if (is_alternation(a)) {
        expect(a, Kind::Gamma, 1, "alternation");
        auto w = S.weights(a);
        s.check(w == alternation_weights(n), a, "alternation weights");
      }
      if (is_ladder(a)) {
        expect(a, Kind::Gamma, n / 2 - 1, "positive ladder");
        expect(a, Kind::Gamma0, n / 2 - 1, "positive ladder");
      }
    });
  }
  ++s.cases;
  s.check(S.weights(alpha0()) == Weights{0, 0, 0, 0}, alpha0(), "alpha0 zero");
  ++s.cases;
  TraceNode t = solve_trace(R("(1-,3-,2-,4-)"), Kind::Gamma);
  s.check(replay(t) == 3, t.input, "trace replay");
}

void bounds(int n_max, std::uint64_t seed, int jobs, Sink& s) {
  auto rs = corpus(n_max);
  auto extra = samples(n_max + 2, 200, seed);
  rs.insert(rs.end(), extra.begin(), extra.end());
  auto& S = default_solver();
  run_all(rs, jobs, s, [&](const Ribbon& a, Sink& k) {
    const int n = a.n();
    InvariantBundle b = invariant_bundle(a);
    for (const auto& v : check_bounds(b, n, is_positive(a), is_negative(a)))
      k.check(v.pass, a, v.name);
    int sg = b.sigma;
    auto sb = sphere_lower_bounds(a);
    if (sg != 2 && sg != -2)
      k.check(sb.general >= 2 + std::abs(sg) / 2, a, "sphere-general");
    k.check(sb.morse >= std::abs(sg), a, "sphere-morse");
    if (n > n_max) return;
    // binary splits at every half-level: subadditive, tight somewhere
    int best = 1 << 30;
    bool any = false;
    for (int tl = 3; tl <= 2 * n - 1; tl += 2) {
      auto cs = crossings_at(a, tl);
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          if (cs[i].up == cs[j].up) continue;
          auto [p1, p2] = binary_split(a, tl, cs[i].arc, cs[j].arc);
          int sum = S.invariant(p1, Kind::Gamma) + S.invariant(p2, Kind::Gamma);
          any = true;
          best = std::min(best, sum);
          if (sum < b.gamma) k.fail(a, "subadditivity");
        }
    }
    if (is_positive(a) && any && expand(a).candidates.size() > 0)
      k.check(best == b.gamma, a, "split-minimizer");
  });
}

void oracle_equivalence(int n_max, std::uint64_t seed, int jobs, Sink& s,
                        std::vector<std::string>& notes) {
  auto rs = corpus(n_max);
  auto extra = samples(n_max + 2, 12, seed);
  rs.insert(rs.end(), extra.begin(), extra.end());
  auto& S = default_solver();
  std::mutex mu;
  std::uint64_t max_sad_diff = 0, gamma0_eq = 0, gamma0_eq_ladder = 0;
  run_all(rs, jobs, s, [&](const Ribbon& a, Sink& k) {
    const int n = a.n(), sg = signature(a);
    PackingOracle o(a);
    for (const auto& e : o.elements())
      k.check(odd_components(a, e), a, "parity-lemma");
    OracleSummary sum = o.summarize();
    Weights w = S.weights(a);
    for (Kind kd : kAllKinds) {
      int i = static_cast<int>(kd);
      if (sum.minimum[i] != w[i])
        k.fail(a, std::string("oracle-") + kind_name(kd) + " solver=" +
                      std::to_string(w[i]) + " oracle=" + std::to_string(sum.minimum[i]));
    }
    k.check(sum.packings >= 1, a, "packing-exists");
    k.check(sum.max_gamma_weight <= 3 * n / 2 - 1, a, "critical-points-le-3n/2-1");
    k.check(w[1] - w[0] <= sum.compression, a, "gamma0-minus-gamma-le-compression");
    k.check(sum.min_nondeg_saddles == w[2] + sg / 2 - 1, a, "min-saddles-formula");
    k.check(sum.min_levels <= w[0], a, "beta-le-gamma");
    if (is_positive(a)) k.check(sum.min_levels == delta(a), a, "beta-eq-delta");
    k.check(S.weights(short_cancel_all(a)) == w, a, "short-cancel-invariance");
    if (n <= 6) {
      for (const auto& g : S.weights_all_gaps(a))
        k.check(g == w, a, "gap-choice-independence");
    }
    // every emitted packing passes the independent checker
    if (n <= 6)
      o.for_each([&](const Packing& p) {
        if (!o.is_packing(p.elements)) k.fail(a, "packing-recheck");
        return true;
      });
    std::lock_guard<std::mutex> lk(mu);
    if (sum.max_nondeg_saddles != w[2] + sg / 2 - 1) ++max_sad_diff;
    if (n >= 4 && w[1] == w[0]) {
      ++gamma0_eq;
      if (is_ladder(a)) ++gamma0_eq_ladder;
    }
  });
  notes.push_back("ribbons where max saddles over packings differs from ext+sigma/2-1: " +
                  std::to_string(max_sad_diff));
  notes.push_back("ribbons (n>=4) with gamma0 == gamma: " + std::to_string(gamma0_eq) +
                  ", of which ladders: " + std::to_string(gamma0_eq_ladder));
}

void zero_detection(int n_max, std::uint64_t seed, int jobs, Sink& s) {
  auto rs = corpus(n_max);
  auto extra = samples(n_max + 2, 200, seed);
  rs.insert(rs.end(), extra.begin(), extra.end());
  auto& S = default_solver();
  run_all(rs, jobs, s, [&](const Ribbon& a, Sink& k) {
    ZeroResult z = is_gamma_zero(a);
    int g = S.invariant(a, Kind::Gamma);
    k.check(z.zero == (g == 0), a, "zero-iff-gamma0");
    if (z.zero) {
      bool ok = !z.chain.empty() && z.chain.front() == a &&
                z.chain.size() == z.steps.size() + 1 && z.chain.back() == alpha0();
      for (std::size_t i = 0; ok && i < z.steps.size(); ++i) {
        const auto& st = z.steps[i];
        ok = is_cancellable(z.chain[i], st.p, st.q) &&
             cancel(z.chain[i], st.p, st.q) == z.chain[i + 1];
      }
      k.check(ok, a, "witness-replay");
    } else {
      k.check(!z.reason.empty(), a, "refutation-tag");
    }
    if (a.n() <= std::min(n_max, 6))
      for (const auto& pq : cancellable_pairs(a))
        k.check(S.invariant(cancel(a, pq.p, pq.q), Kind::Gamma) >= g, a,
                "cancellation-monotone");
  });
  ++s.cases;
  Ribbon j = R("(1+,6+,2-,4+,3-,5+)");
  s.check(is_gamma_zero(j).zero, j, "jordan-example-zero");
}

void jump_table(int n_max, std::uint64_t seed, int jobs, Sink& s,
                std::vector<std::string>& notes) {
  auto rs = corpus(n_max);
  auto extra = samples(n_max + 2, 150, seed);
  rs.insert(rs.end(), extra.begin(), extra.end());
  auto& S = default_solver();
  std::mutex mu;
  std::uint64_t xi_rule_hits = 0, xi_rule_total = 0;
  run_all(rs, jobs, s, [&](const Ribbon& a, Sink& k) {
    int g = S.invariant(a, Kind::Gamma);
    int sg = signature(a);
    for (const Move& m : all_moves(a)) {
      Ribbon b = apply_move(a, m);
      char c = jump_class(a, m);
      int eps = S.invariant(b, Kind::Gamma) - g;
      auto js = jump_set(c);
      if (std::find(js.begin(), js.end(), eps) == js.end())
        k.fail(a, std::string("jump class ") + c + " " + move_kind_name(m.kind) +
                      " eps=" + std::to_string(eps));
      k.seen.insert(std::string(1, c) + ":" + std::to_string(eps));
      int sb = signature(b);
      if (m.kind == MoveKind::Flip)
        k.check(std::abs(sb - sg) == 2, a, "flip-sigma");
      else
        k.check(sb == sg, a, "sigma-invariant");
      if (m.kind == MoveKind::Meeting || m.kind == MoveKind::Separation ||
          m.kind == MoveKind::Bypass) {
        // the node that held k now holds k+1 and vice versa
        int v = a.values[m.p];
        Move inv{m.kind == MoveKind::Bypass    ? MoveKind::Bypass
                 : m.kind == MoveKind::Meeting ? MoveKind::Separation
                                               : MoveKind::Meeting,
                 b.node_of_value(v), b.node_of_value(v + 1)};
        k.check(move_applicable(b, inv) && apply_move(b, inv) == a, a,
                "swap-inverse");
      }
      if (m.kind == MoveKind::Flip)
        k.check(apply_move(b, Move{MoveKind::Flip, b.node_of_value(a.values[m.p])}) == a,
                a, "flip-inverse");
      if (m.kind == MoveKind::Birth) {
        bool undone = false;
        for (const auto& pq : short_cancellable_pairs(b)) {
          Move d{MoveKind::Death, pq.p, pq.q};
          if (move_applicable(b, d) && apply_move(b, d) == a) undone = true;
        }
        k.check(undone, a, "birth-death-inverse");
      }
      if ((m.kind == MoveKind::Meeting || m.kind == MoveKind::Separation) &&
          a.marks[m.p] > 0 && a.marks[m.q] > 0) {
        int d = cl_plus_plus(b) - cl_plus_plus(a);
        std::lock_guard<std::mutex> lk(mu);
        ++xi_rule_total;
        if (std::abs(d) <= 1) ++xi_rule_hits;
      }
    }
  });
  std::map<char, std::string> attained;
  for (const auto& t : s.seen) attained[t[0]] += " " + t.substr(2);
  for (char c = 'a'; c <= 'j'; ++c) {
    for (int v : jump_set(c))
      if (!s.seen.count(std::string(1, c) + ":" + std::to_string(v)))
        s.fail("jump class " + std::string(1, c) + ": listed value " +
               std::to_string(v) + " never attained");
    notes.push_back(std::string("class ") + c + " attained:" + attained[c]);
  }
  notes.push_back("cl++ changes by at most 1 on positive meetings/separations: " +
                  std::to_string(xi_rule_hits) + "/" + std::to_string(xi_rule_total));
}

void closed_forms(int n_max, Sink& s) {
  auto& S = default_solver();
  for (int n = 4; n <= n_max; n += 2) {
    auto v = ladder_perm(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      Ribbon a{v, std::vector<int>(n)};
      for (int i = 0; i < n; ++i) a.marks[i] = (m >> i) & 1 ? -1 : 1;
      ++s.cases;
      bool ext_pos = a.marks[0] > 0 && a.marks[n - 1] > 0;
      if (!ext_pos) {
        bool threw = false;
        try {
          ladder_closed_form(a, Kind::Gamma);
        } catch (const RibbonError& e) {
          threw = e.code == ErrorCode::PreconditionViolated;
        }
        s.check(threw, a, "ladder-precondition");
        continue;
      }
      for (Kind k : kAllKinds)
        if (ladder_closed_form(a, k) != S.invariant(a, k))
          s.fail(a, std::string("ladder-formula ") + kind_name(k));
    }
    // the reversed orientation is also a canonical ladder
    Ribbon rev = invert(Ribbon{v, std::vector<int>(n, 1)});
    ++s.cases;
    s.check(ladder_closed_form(rev, Kind::Gamma) == S.invariant(rev, Kind::Gamma), rev,
            "ladder-formula reversed");
  }
  // additivity under connected sum
  std::vector<Ribbon> pool;
  for (int n = 2; n <= n_max - 2; n += 2)
    for_each_ribbon(n, {}, [&](const Ribbon& a) {
      if (sum_admissible(a, a)) pool.push_back(a);
    });
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.n() + b.n() - 2 > n_max) continue;
      ++s.cases;
      Ribbon c = connected_sum(a, b);
      Weights wa = S.weights(a), wb = S.weights(b), wc = S.weights(c);
      for (int i = 0; i < 4; ++i)
        if (wc[i] != wa[i] + wb[i]) {
          s.fail(c, "sum-additivity " + to_string(a) + " # " + to_string(b) + " " +
                        wstr(wc));
          break;
        }
      s.check(signature(c) == signature(a) + signature(b) - 2, c, "sum-signature");
    }
  // associativity on small triples
  std::vector<Ribbon> small;
  for (const auto& a : pool)
    if (a.n() <= 4) small.push_back(a);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        ++s.cases;
        s.check(connected_sum(connected_sum(a, b), c) ==
                    connected_sum(a, connected_sum(b, c)),
                a, "sum-associativity");
      }
  // extremum-versus-saddle construction, k = 2
  ++s.cases;
  Ribbon a1 = R("(1-,3-,2-,4+)");
  Ribbon lad = Ribbon{ladder_perm(6), std::vector<int>(6, 1)};
  Ribbon e2 = connected_sum(a1, lad, false);
  Weights w = S.weights(e2);
  s.check(w[0] == 4 && w[2] == 2 && w[3] == 2, e2, "e2 instance " + wstr(w));
  s.check(w[0] == S.invariant(a1, Kind::Gamma) + S.invariant(lad, Kind::Gamma), e2,
          "e2 additivity");
}

void counting(int n_max, Sink& s, std::vector<std::string>& notes) {
  auto& S = default_solver();
  auto t = tangent_numbers(11);
  const int known[] = {1, 1, 1, 2, 5, 16, 61, 272};
  for (int i = 0; i < 8; ++i) {
    ++s.cases;
    if (t[i] != known[i]) s.fail("tangent number A_" + std::to_string(i));
  }
  for (int n = 2; n <= n_max; n += 2) {
    CountRow row = count_ribbons(n);
    std::uint64_t total = 0, positive = 0, alternations = 0, shapes = 0, ladders = 0;
    std::map<int, std::uint64_t> per_sigma;
    std::unordered_set<RibbonKey, RibbonKeyHash> keys;
    int max_pos_gamma = -1;
    bool max_on_ladders_only = true;
    for_each_ribbon(n, {}, [&](const Ribbon& a) {
      ++s.cases;
      ++total;
      validate(a.values, a.marks);
      if (!keys.insert(key_of(a)).second) s.fail(a, "duplicate ribbon");
      ++per_sigma[signature(a)];
      if (is_ladder(a)) ++ladders;
      if (!is_positive(a)) return;
      ++positive;
      if (is_alternation(a)) ++alternations;
      if (is_ladder(a)) ++shapes;
      int g = S.invariant(a, Kind::Gamma);
      if (g > max_pos_gamma) max_pos_gamma = g;
    });
    if (n >= 4)
      for_each_ribbon(n, {RibbonFilter::Positive}, [&](const Ribbon& a) {
        if (S.invariant(a, Kind::Gamma) == max_pos_gamma && !is_ladder(a))
          max_on_ladders_only = false;
      });
    std::string tag = " n=" + std::to_string(n);
    if (BigInt(total) != row.ribbons) s.fail("ribbon count" + tag);
    if (BigInt(positive) != row.positive) s.fail("positive count" + tag);
    for (auto& [sg, c] : row.per_sigma)
      if (BigInt(per_sigma[sg]) != c) s.fail("sigma stratum " + std::to_string(sg) + tag);
    BigInt sum = 0;
    for (auto& [sg, c] : row.per_sigma) sum += c;
    if (sum != row.ribbons) s.fail("strata sum" + tag);
    if (n >= 4) {
      if (BigInt(alternations) != alternation_count(n)) s.fail("alternation count" + tag);
      if (BigInt(shapes) != ladder_shape_count(n)) s.fail("ladder shape count" + tag);
      if (BigInt(ladders) != general_ladder_count(n)) s.fail("general ladder count" + tag);
      if (max_pos_gamma != n / 2 - 1) s.fail("max positive gamma" + tag);
      if (!max_on_ladders_only) s.fail("max positive gamma off ladders" + tag);
    }
    notes.push_back("n=" + std::to_string(n) + ": ribbons " + std::to_string(total) +
                    ", positive " + std::to_string(positive));
  }
  // extension counting
  for (int n = 4; n <= n_max; n += 2) {
    auto v = ladder_perm(n);
    ++s.cases;
    Ribbon neg{v, std::vector<int>(n, -1)};
    std::uint64_t c = count_minimal(neg, Kind::Gamma);
    if (c != (1ull << (n / 2 - 1)))
      s.fail(neg, "negative ladder extensions " + std::to_string(c));
    if (count_free_extensions(v) != c) s.fail(neg, "free extension count");
    ++s.cases;
    Ribbon pos{v, std::vector<int>(n, 1)};
    if (count_packings(pos) != 1) s.fail(pos, "positive ladder unique packing");
    for_each_ribbon(n, {RibbonFilter::Negative}, [&](const Ribbon& a) {
      ++s.cases;
      if (count_minimal(a, Kind::Gamma) < (1ull << (n / 2 - 1)))
        s.fail(a, "extension lower bound");
    });
  }
  // stream count one size up
  int big = n_max + 2;
  if (big <= 10) {
    std::uint64_t total = 0;
    for_each_ribbon(big, {}, [&](const Ribbon&) { ++total; });
    ++s.cases;
    if (BigInt(total) != count_ribbons(big).ribbons)
      s.fail("ribbon count n=" + std::to_string(big));
    notes.push_back("n=" + std::to_string(big) + ": ribbons " + std::to_string(total));
  }
}

void involutions(int n_max, int jobs, Sink& s) {
  auto rs = corpus(n_max);
  auto& S = default_solver();
  for (std::size_t i = 0; i + 1 < rs.size(); ++i)
    if (!(lex_compare(rs[i], rs[i + 1]) < 0 && lex_compare(rs[i + 1], rs[i]) > 0))
      s.fail(rs[i], "lex-order");
  if (!rs.empty() && !(rs.front() == alpha0())) s.fail("alpha0 minimal");
  run_all(rs, jobs, s, [&](const Ribbon& a, Sink& k) {
    Ribbon inv = invert(a);
    k.check(invert(inv) == a, a, "invert-involution");
    k.check(S.weights(inv) == S.weights(a), a, "invert-preserves-invariants");
    Ribbon bar = mark_flip_all(a);
    k.check(mark_flip_all(bar) == a, a, "flip-involution");
    k.check(signature(bar) == -signature(a), a, "flip-signature");
    k.check(canonicalize(canonicalize(a)) == canonicalize(a), a, "canonical-idempotent");
    k.check(parse_ribbon(to_string(a)) == a, a, "text-roundtrip");
    nlohmann::json j{{"values", a.values}, {"marks", a.marks}};
    k.check(parse_any(j.dump()) == a, a, "json-roundtrip");
    Ribbon sc = short_cancel_all(a);
    k.check(short_cancel_all(sc) == sc, a, "short-cancel-idempotent");
    for (int tl = 3; tl <= 2 * a.n() - 1; tl += 2) {
      auto cs = crossings_at(a, tl);
      bool ok = cs.size() % 2 == 0 && cs.size() >= 2;
      for (std::size_t i = 0; ok && i < cs.size(); ++i)
        ok = cs[i].up != cs[(i + 1) % cs.size()].up;
      k.check(ok, a, "crossings-alternate");
    }
  });
}

MarkedRibbon random_marked(int n, std::mt19937_64& rng) {
  for (;;) {
    Ribbon a = random_ribbon(n, std::nullopt, rng);
    std::vector<int> mins, maxs;
    for (int i = 0; i < n; ++i) {
      if (a.marks[i] < 0) continue;
      (a.is_max(i) ? maxs : mins).push_back(i);
    }
    if (mins.empty() || maxs.empty()) continue;
    MarkedRibbon m;
    m.origin = mins[rng() % mins.size()];
    m.end = maxs[rng() % maxs.size()];
    // distinct sub-unit offsets keep levels generic after translation
    for (int i = 0; i < n; ++i)
      m.ribbon.levels.push_back(Rational(a.values[i]) +
                                Rational(static_cast<long long>(rng() % 997 + 1), 1000));
    m.ribbon.marks = a.marks;
    return m;
  }
}

void semigroup(int n_max, std::uint64_t seed, Sink& s) {
  auto& S = default_solver();
  std::mt19937_64 rng(seed);
  const int part_max = std::min(n_max, 6);
  auto rand_n = [&] { return 2 * static_cast<int>(1 + rng() % (part_max / 2)); };
  int done = 0;
  for (int attempt = 0; done < 300 && attempt < 3000; ++attempt) {
    MarkedRibbon a = random_marked(rand_n(), rng), b = random_marked(rand_n(), rng),
                 c = random_marked(rand_n(), rng);
    try {
      MarkedRibbon ab = compose(a, b);
      Ribbon da = discrete(a), db = discrete(b), dc = discrete(c), dab = discrete(ab);
      ++s.cases;
      s.check(signature(dab) == signature(da) + signature(db) - 2, dab, "compose-signature");
      s.check(index_of(dab) == index_of(da) + index_of(db), dab, "compose-index");
      Weights wa = S.weights(da), wb = S.weights(db), wab = S.weights(dab);
      for (int i = 0; i < 4; ++i)
        s.check(wab[i] <= wa[i] + wb[i], dab, "compose-subadditive");
      MarkedRibbon lhs = compose(ab, c), rhs = compose(a, compose(b, c));
      s.check(discrete(lhs) == discrete(rhs), discrete(lhs), "compose-associative");
      s.check(discrete(marked_invert(ab)) ==
                  discrete(compose(marked_invert(b), marked_invert(a))),
              dab, "compose-inverse-antihomomorphism");
      MarkedRibbon t = ternary_compose(a, b, c);
      Ribbon dt = discrete(t);
      s.check(signature(dt) == signature(da) + signature(db) + signature(dc) - 4, dt,
              "ternary-signature");
      s.check(index_of(dt) == index_of(da) + index_of(db) + index_of(dc), dt,
              "ternary-index");
      Weights wc = S.weights(dc), wt = S.weights(dt);
      for (int i = 0; i < 4; ++i)
        s.check(wt[i] <= wa[i] + wb[i] + wc[i], dt, "ternary-subadditive");
      ++done;
    } catch (const RibbonError& e) {
      if (e.code != ErrorCode::LevelCollision) throw;
    }
  }
  if (done < 300) s.fail("too many level collisions");
}

void realizability(int n_max, int jobs, Sink& s, std::vector<std::string>& notes) {
  auto& S = default_solver();
  for (int n = 2; n <= n_max; n += 2) {
    auto perms = zigzag_perms(n);
    std::vector<Ribbon> shapes;
    for (auto& p : perms) shapes.push_back(Ribbon{p, std::vector<int>(n, 1)});
    run_all(shapes, jobs, s, [&](const Ribbon& shape, Sink& k) {
      std::set<int> gs;
      Ribbon a = shape;
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        for (int i = 0; i < n; ++i) a.marks[i] = (m >> i) & 1 ? -1 : 1;
        gs.insert(S.invariant(a, Kind::Gamma));
      }
      for (int g = 0; g <= n / 2 + 1; ++g)
        if (!gs.count(g)) k.fail(shape, "gamma " + std::to_string(g) + " not realized");
    });
    auto pairs = realizable_pairs(n);
    for (auto [sg, g] : pairs) {
      if (g == 0 && sg != 2) s.fail("pair (sigma!=2, gamma=0) n=" + std::to_string(n));
      if (g == 1 && sg == 2) s.fail("pair (sigma=2, gamma=1) n=" + std::to_string(n));
      if (sg < 0 && g == 2 - sg / 2) s.fail("pair (sigma<0, gamma=2-sigma/2) n=" +
                                            std::to_string(n));
    }
    std::ostringstream o;
    o << "n=" << n << " gamma histogram:";
    for (auto [g, c] : gamma_distribution(n)) o << " " << g << ":" << c;
    notes.push_back(o.str());
  }
}

// Every sequence of A moves against the mirror reply.
bool mirror_wins(GameState g, Sink& s) {
  if (g.finished) return g.winner == 'B';
  const int n = static_cast<int>(g.perm.size());
  bool all = true;
  for (int i = 0; i < n && all; ++i) {
    if (!legal(g, i)) continue;
    GameState h = g;
    play(h, i);
    int r = mirror_reply(h, i);
    if (r < 0 || !legal(h, r)) {
      s.fail(final_ribbon(h), "mirror reply unavailable");
      return false;
    }
    play(h, r);
    all = mirror_wins(h, s);
  }
  return all;
}

void game_ladder(int n_max, Sink& s, std::vector<std::string>& notes) {
  const int top = std::min(n_max, kExactHintMaxN);
  for (int n = 4; n <= top; n += 2) {
    auto v = ladder_perm(n);
    ++s.cases;
    Ribbon shape{v, std::vector<int>(n, 1)};
    if (!mirror_wins(new_game(v), s)) s.fail(shape, "mirror strategy loses");
    ++s.cases;
    if (solve_game(v) != 'B') s.fail(shape, "minimax winner is not B");
    // after each opening A move some B reply keeps the win
    GameState g = new_game(v);
    GameSolver gs(g.perm);
    for (const auto& h : hints(g, &gs)) {
      GameState x = g;
      play(x, h.node);
      auto replies = hints(x, &gs);
      ++s.cases;
      bool ok = std::any_of(replies.begin(), replies.end(),
                            [](const Hint& r) { return r.verdict == 'B'; });
      if (!ok) s.fail(shape, "no winning reply for B");
    }
  }
  for (int n = 4; n <= top; n += 2) {
    int b_wins = 0, total = 0;
    for (auto& p : zigzag_perms(n)) {
      ++total;
      b_wins += solve_game(p) == 'B';
    }
    notes.push_back("n=" + std::to_string(n) + ": B wins under optimal play on " +
                    std::to_string(b_wins) + "/" + std::to_string(total) +
                    " permutations");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "base-values", "bounds",       "oracle-equivalence", "zero-detection",
      "jump-table",  "closed-forms", "counting",           "involutions",
      "semigroup",   "realizability", "game-ladder"};
  return names;
}

int default_n_max(const std::string& name) {
  if (name == "jump-table") return 6;
  return 8;
}

SuiteReport run_suite(const std::string& name, int n_max, std::uint64_t seed, int jobs) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownSuite(name);
  if (n_max < 2 || n_max % 2 || n_max > 10)
    throw RibbonError(ErrorCode::LimitExceeded, "n_max must be even in [2, 10]");
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  r.name = name;
  r.n_max = n_max;
  r.seed = seed;
  Sink s;
  if (name == "base-values") base_values(n_max, s);
  else if (name == "bounds") bounds(n_max, seed, jobs, s);
  else if (name == "oracle-equivalence") oracle_equivalence(n_max, seed, jobs, s, r.notes);
  else if (name == "zero-detection") zero_detection(n_max, seed, jobs, s);
  else if (name == "jump-table") jump_table(n_max, seed, jobs, s, r.notes);
  else if (name == "closed-forms") closed_forms(n_max, s);
  else if (name == "counting") counting(n_max, s, r.notes);
  else if (name == "involutions") involutions(n_max, jobs, s);
  else if (name == "semigroup") semigroup(n_max, seed, s);
  else if (name == "realizability") realizability(n_max, jobs, s, r.notes);
  else if (name == "game-ladder") game_ladder(n_max, s, r.notes);
  std::sort(s.failures.begin(), s.failures.end(), failure_less);
  if (s.failures.size() > kFailureCap) s.failures.resize(kFailureCap);
  r.failures = std::move(s.failures);
  r.failure_count = s.failure_count;
  r.cases = s.cases;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_json(const SuiteReport& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"ribbon", f.ribbon ? to_string(*f.ribbon) : ""},
                     {"clause", f.clause}});
  nlohmann::json j{{"suite", r.name},          {"n_max", r.n_max},
                   {"seed", r.seed},           {"cases", r.cases},
                   {"failure_count", r.failure_count},
                   {"failures", fails},        {"notes", r.notes},
                   {"seconds", r.seconds},     {"passed", r.passed()}};
  return j.dump(2);
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream o;
  o << "suite " << r.name << " n<=" << r.n_max << " seed=" << r.seed << ": "
    << r.cases << " cases, " << r.failure_count << " failures, " << r.seconds
    << " s -> " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& n : r.notes) o << "  note: " << n << "\n";
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (++shown > 20) break;
    o << "  fail: " << (f.ribbon ? to_string(*f.ribbon) : std::string("-")) << " "
      << f.clause << "\n";
  }
  return o.str();
}

}  // namespace ribbon
