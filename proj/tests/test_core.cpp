#include "doctest.h"
#include "ribbonlab/core.hpp"

using namespace ribbon;

namespace {
Ribbon R(const char* s) { return parse_ribbon(s); }
ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const RibbonError& e) {
    return e.code;
  }
  FAIL("no error raised");
  return ErrorCode::InternalNoCandidate;
}
}  // namespace

TEST_CASE("construction and validation") {
  Ribbon a = new_ribbon({1, 6, 2, 4, 3, 5}, {1, 1, -1, 1, 1, -1});
  CHECK(to_string(a) == "(1+,6+,2-,4+,3+,5-)");
  CHECK(new_ribbon({1, 2}, {1, 1}) == alpha0());
  Ribbon rot = new_ribbon({2, 4, 1, 3}, {1, -1, 1, 1});
  CHECK(rot.values == std::vector<int>{1, 3, 2, 4});
  CHECK(rot.marks == std::vector<int>{1, 1, 1, -1});
  CHECK(code_of([] { new_ribbon({1, 2, 3, 4}, {1, 1, 1, 1}); }) == ErrorCode::NotZigZag);
  CHECK(code_of([] { new_ribbon({1, 3, 2}, {1, 1, 1}); }) == ErrorCode::OddLength);
  CHECK(code_of([] { new_ribbon({1, 3, 3, 4}, {1, 1, 1, 1}); }) == ErrorCode::NotPermutation);
  CHECK(code_of([] { new_ribbon({1, 2}, {1, 0}); }) == ErrorCode::BadMark);
}

TEST_CASE("from_levels ranks rational levels") {
  RigidRibbon r{{Rational(1, 2), Rational(29, 4), Rational(1), Rational(3), Rational(2),
                 Rational(7, 2)},
                {1, 1, -1, 1, 1, -1}};
  CHECK(from_levels(r) == R("(1+,6+,2-,4+,3+,5-)"));
  CHECK(from_levels(RigidRibbon{{Rational(1), Rational(2)}, {1, 1}}) == alpha0());
  RigidRibbon tie{{Rational(0), Rational(3), Rational(1), Rational(3)}, {1, 1, 1, 1}};
  CHECK(code_of([&] { from_levels(tie); }) == ErrorCode::DuplicateLevel);
}

TEST_CASE("signature and index") {
  Ribbon a = R("(1+,6+,2-,4+,3+,5-)");
  CHECK(signature(a) == 2);
  CHECK(index_of(a) == 0);
  Ribbon neg = R("(1-,3-,2-,4-)");
  CHECK(signature(neg) == -4);
  CHECK(index_of(neg) == 3);
  CHECK(signature(alpha0()) == 2);
}

TEST_CASE("lex order") {
  Ribbon a = R("(1+,3+,2+,4+)"), b = R("(1+,3+,2-,4+)");
  CHECK(lex_less(alpha0(), a));
  CHECK(lex_compare(a, a) == 0);
  CHECK(lex_less(a, b));
  CHECK(lex_less(R("(1+,2+)"), R("(1+,2-)")));
}

TEST_CASE("involutions") {
  CHECK(mark_flip_all(alpha0()) == R("(1-,2-)"));
  Ribbon a = R("(1+,6+,2-,4+,3+,5-)");
  CHECK(mark_flip_all(mark_flip_all(a)) == a);
  CHECK(signature(mark_flip_all(a)) == -signature(a));
  CHECK(invert(R("(1+,2-)")) == R("(1-,2+)"));
  CHECK(invert(invert(a)) == a);
}

TEST_CASE("crossings") {
  Ribbon lad = R("(1+,3+,2+,5+,4+,7+,6+,8+)");
  CHECK(crossings(lad, 2).size() == 4);
  CHECK(crossings(lad, 1).size() == 2);
  Ribbon alt = R("(1+,6+,2+,4+,3+,5+)");
  auto cs = crossings(alt, 3);
  CHECK(cs.size() == 6);
  for (std::size_t i = 0; i < cs.size(); ++i) CHECK(cs[i].up != cs[(i + 1) % cs.size()].up);
  Ribbon neg = R("(1-,3-,2-,4-)");
  auto nc = node_level_crossings(neg, 1);  // value 3
  REQUIRE(nc.size() == 2);
  CHECK(nc[0].arc == 2);  // 2 -> 4
  CHECK(nc[1].arc == 3);  // 4 -> 1
  CHECK(node_level_crossings(neg, 0).empty());
  CHECK(node_level_crossings(neg, 3).empty());
}

TEST_CASE("cancellation") {
  CHECK(short_cancel_all(R("(1+,3+,2-,4+)")) == alpha0());
  Ribbon lad = R("(1+,3+,2+,5+,4+,7+,6+,8+)");
  CHECK(short_cancel_all(lad) == lad);
  CHECK(short_cancel_all(R("(1+,2-)")) == R("(1+,2-)"));
  Ribbon a = R("(1+,6+,2-,4+,3-,5+)");
  for (const auto& pq : cancellable_pairs(a)) {
    CHECK(a.marks[pq.p] < 0);
    CHECK(a.marks[pq.q] > 0);
    CHECK(signature(cancel(a, pq.p, pq.q)) == signature(a));
  }
  CHECK(is_cancellable(a, 2, 1));
  // 2- and 4+: the arc from 4 to 3 is shorter than the one to 2
  CHECK_FALSE(is_cancellable(a, 2, 3));
  CHECK(code_of([&] { cancel(a, 2, 3); }) == ErrorCode::NotCancellable);
}

TEST_CASE("shape predicates") {
  CHECK(is_ladder(R("(1+,3+,2+,5+,4+,7+,6+,8+)")));
  CHECK_FALSE(is_ladder(R("(1+,6+,2+,4+,3+,5+)")));
  CHECK(is_alternation(R("(1+,6+,2+,4+,3+,5+)")));
  CHECK_FALSE(is_alternation(R("(1+,6+,2-,4+,3+,5+)")));
  CHECK(is_positive(alpha0()));
  CHECK(is_negative(R("(1-,2-)")));
}

TEST_CASE("notation round trips") {
  Ribbon a = R(" ( 1+, 6+ ,2-,4+,3+,5- ) ");
  CHECK(parse_ribbon(to_string(a)) == a);
  CHECK(parse_any(R"({"values":[1,6,2,4,3,5],"marks":[1,1,-1,1,1,-1]})") == a);
  CHECK(code_of([] { parse_ribbon("(1+,2*)"); }) == ErrorCode::ParseError);
}

TEST_CASE("rolle predicate") {
  WeakProfile w{{Rational(0), Rational(5), Rational(0), Rational(5), Rational(1), Rational(5)}};
  auto [n, s] = profile_counts(w);
  CHECK(n == 6);
  CHECK(s == 5);
  CHECK(is_rolle(w));
}
