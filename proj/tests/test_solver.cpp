#include <sstream>

#include "doctest.h"
#include "ribbonlab/solver.hpp"

using namespace ribbon;

namespace {
Ribbon R(const char* s) { return parse_ribbon(s); }
Weights W(const char* s) { return default_solver().weights(R(s)); }
}  // namespace

TEST_CASE("two-node base values") {
  CHECK(invariant(R("(1+,2+)"), Kind::Gamma) == 0);
  CHECK(invariant(R("(1+,2-)"), Kind::Gamma) == 1);
  CHECK(invariant(R("(1-,2+)"), Kind::Gamma) == 1);
  CHECK(invariant(R("(1-,2-)"), Kind::Gamma) == 2);
}

TEST_CASE("worked examples") {
  CHECK(W("(1+,6+,2-,4+,3+,5-)") == Weights{2, 2, 1, 1});
  CHECK(invariant(R("(1-,3-,2-,4-)"), Kind::Gamma) == 3);
  CHECK(invariant(R("(1+,3+,2+,5+,4+,7+,6-,9+,8+,10+)"), Kind::Gamma) == 3);
  CHECK(W("(1+,6+,2+,4+,3+,5+)") == Weights{1, 2, 0, 1});
  CHECK(W("(1-,5+,3+,6+,2-,7+,4+,8+)") == Weights{3, 3, 1, 1});
}

TEST_CASE("bundle and bounds") {
  InvariantBundle b = invariant_bundle(R("(1+,3+,2+,5+,4+,7+,6+,8+)"));
  CHECK(b.gamma == 3);
  CHECK(b.gamma0 == 3);
  CHECK(b.delta == 3);
  CHECK(b.gamma_ext == 0);
  CHECK(b.gamma_sad == 3);
  CHECK(b.touching == 0);
  for (const auto& v : check_bounds(b, 8, true, false)) CHECK_MESSAGE(v.pass, v.name);
  InvariantBundle neg = invariant_bundle(R("(1-,3-,2-,4-)"));
  CHECK(neg.gamma_ext == 3);
  CHECK(neg.touching == 1);
  InvariantBundle z = invariant_bundle(alpha0());
  CHECK(z.gamma == 0);
  CHECK(z.sigma == 2);
  CHECK(z.delta == 0);
}

TEST_CASE("clusters and cluster numbers") {
  Ribbon lad = R("(1+,3+,2+,5+,4+,7+,6+,8+)");
  auto cl = clusters(lad);
  REQUIRE(cl.size() == 3);
  CHECK(cl[0].lo == 2);
  CHECK(cl[2].hi == 7);
  CHECK(delta(lad) == 3);
  CHECK(delta(R("(1+,6+,2+,4+,3+,5+)")) == 1);
  CHECK(delta0(alpha0()) == 0);
}

TEST_CASE("gamma zero decision") {
  auto z = is_gamma_zero(R("(1+,6+,2-,4+,3-,5+)"));
  CHECK(z.zero);
  CHECK(z.chain.back() == alpha0());
  CHECK(z.steps.size() + 1 == z.chain.size());
  auto y = is_gamma_zero(R("(1+,6+,2-,4+,3+,5-)"));
  CHECK_FALSE(y.zero);
  CHECK(is_gamma_zero(R("(1+,3+,2+,4+)")).reason == "signature");
}

TEST_CASE("ladder closed form") {
  Ribbon lad = R("(1+,3+,2+,5+,4+,7+,6+,8+)");
  CHECK(ladder_closed_form(lad, Kind::Gamma) == 3);
  Ribbon ex = R("(1+,3+,2+,5+,4+,7+,6-,9+,8+,10+)");
  for (Kind k : kAllKinds) CHECK(ladder_closed_form(ex, k) == invariant(ex, k));
  CHECK_THROWS_AS(ladder_closed_form(R("(1+,6+,2+,4+,3+,5+)"), Kind::Gamma), RibbonError);
  CHECK_THROWS_AS(ladder_closed_form(R("(1-,3+,2+,4+)"), Kind::Gamma), RibbonError);
}

TEST_CASE("cl++") {
  Ribbon lad = R("(1+,3+,2+,5+,4+,7+,6+,8+)");
  CHECK(cl_plus_plus(lad) == 2);
  CHECK(primary_xi(lad, lad.node_of_value(3)) == 1);
  CHECK(primary_xi(lad, lad.node_of_value(2)) == 0);
}

TEST_CASE("trace replays to the invariant") {
  TraceNode t = solve_trace(R("(1-,3-,2-,4-)"), Kind::Gamma);
  CHECK(replay(t) == 3);
  TraceNode leaf = solve_trace(alpha0(), Kind::Gamma);
  CHECK(leaf.children.empty());
  CHECK(leaf.value == 0);
  TraceNode alt = solve_trace(R("(1+,6+,2+,4+,3+,5+)"), Kind::Gamma0);
  CHECK(alt.kind == SplitKind::Leaf);
  CHECK(replay(alt) == 2);
}

TEST_CASE("sphere bounds") {
  auto sb = sphere_lower_bounds(R("(1-,3-,2-,4-)"));
  CHECK(sb.general >= 4);
  CHECK(sb.morse >= 4);
}

TEST_CASE("memo persistence") {
  Solver s;
  Weights w = s.weights(R("(1+,6+,2-,4+,3+,5-)"));
  std::stringstream io;
  s.save(io);
  Solver t;
  std::size_t bad = 0;
  CHECK(t.load(io, true, &bad) > 0);
  CHECK(bad == 0);
  CHECK(t.weights(R("(1+,6+,2-,4+,3+,5-)")) == w);
  std::stringstream wrong("(1+,2-) g=5 g0=5 ge=5 gs=5\n");
  Solver u;
  u.load(wrong, true, &bad);
  CHECK(bad == 1);
  CHECK(u.weights(R("(1+,2-)")) == Weights{1, 1, 1, 0});
}
